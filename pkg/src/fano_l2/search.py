"""Independent brute-force and branch-and-bound oracles.

Everything here recomputes extremal values from scratch so the analytic
formulas and constructions elsewhere in the package can be checked against
exhaustive ground truth at desk scale: the full 4-vertex multigraph census,
branch-and-bound for multigraph Turán numbers, two-edge-star maxima over all
small graphs, the minimum-degree bipartiteness scan, the maximum-norm
Fano-free search on seven vertices, and the bipartite norm scan.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

import numpy as np

from .graphs import SimpleGraph, all_pairs, quasi_complete, quasi_star
from .hypergraphs import Uniform3Graph, bipartite3, bn_l2_closed, complete3
from .multigraphs import MMultigraph, contains_k4, turan_layers_5
from .patterns import FANO_EDGES, contains_fano
from .formats import write_3graph, write_graph, write_mgraph


@dataclass(frozen=True, slots=True)
class SearchReport:
    """Outcome of one oracle run; witness is serialized in the named format."""

    objective: str
    n: int
    m: int | None
    optimum: int
    witness: str
    witness_kind: str
    nodes: int
    elapsed: float
    complete: bool
    engine: str
    params: dict = field(default_factory=dict)


# ----- 4-vertex multigraph census ---------------------------------------------
#
# State encoding: the six pair color masks in the fixed order
#   C(01), C(23), C(02), C(13), C(03), C(12)
# so the three perfect matchings occupy consecutive slots. The scan iterates
# the first two masks as an outer block and vectorizes the remaining four,
# which makes ascending block-then-index order the lexicographic order of the
# full state; witnesses are lexicographically minimal among maximum states.

_CENSUS_PAIRS = ((0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2))


def _inner_tables(m: int):
    size = 1 << m
    pop = np.array([x.bit_count() for x in range(size)], dtype=np.uint8)
    inner = np.arange(size**4, dtype=np.uint32)
    mask = size - 1
    a2 = (inner >> (3 * m)) & mask
    b2 = (inner >> (2 * m)) & mask
    a3 = (inner >> m) & mask
    b3 = inner & mask
    i2 = a2 & b2
    i3 = a3 & b3
    u23 = i2 | i3
    pop_i2 = pop[i2]
    pop_i3 = pop[i3]
    return {
        "pop": pop,
        "s2": pop[a2] + pop[b2],
        "s3": pop[a3] + pop[b3],
        "pop_inner": pop[a2] + pop[b2] + pop[a3] + pop[b3],
        "i2": i2,
        "i3": i3,
        "pop_i2": pop_i2,
        "pop_i3": pop_i3,
        "u23": u23,
        "hall_base": (pop_i2 >= 1) & (pop_i3 >= 1) & (pop[u23] >= 2),
        "full_mu": (
            (pop[a2] == m) | (pop[b2] == m) | (pop[a3] == m) | (pop[b3] == m)
        ),
    }


_INNER_CACHE: dict[int, dict] = {}


def _census_range(m: int, block_lo: int, block_hi: int) -> dict:
    """Scan outer blocks [block_lo, block_hi) and aggregate statistics."""
    if m not in _INNER_CACHE:
        _INNER_CACHE[m] = _inner_tables(m)
    t = _INNER_CACHE[m]
    pop = t["pop"]
    size_bits = 1 << m
    hist = np.zeros(6 * m + 1, dtype=np.int64)
    k4_free = 0
    viol_i = viol_iii = viol_iv = viol_v = 0
    best = -1
    best_state = None
    for block in range(block_lo, block_hi):
        a1, b1 = divmod(block, size_bits)
        i1 = a1 & b1
        pop_i1 = int(pop[i1])
        s1 = int(pop[a1]) + int(pop[b1])
        if pop_i1 >= 1:
            sdr = (
                t["hall_base"]
                & (pop[i1 | t["i2"]] >= 2)
                & (pop[i1 | t["i3"]] >= 2)
                & (pop[i1 | t["u23"]] >= 3)
            )
        else:
            sdr = np.zeros(len(t["i2"]), dtype=bool)
        free = ~sdr
        sizes = t["pop_inner"] + np.uint8(s1)
        free_sizes = np.where(free, sizes, 0)
        hist += np.bincount(sizes[free], minlength=6 * m + 1)
        k4_free += int(free.sum())
        block_best = int(free_sizes.max()) if len(free_sizes) else -1
        if block_best > best:
            best = block_best
            idx = int(np.argmax(free_sizes == block_best))
            mask4 = size_bits - 1
            best_state = (
                a1,
                b1,
                (idx >> (3 * m)) & mask4,
                (idx >> (2 * m)) & mask4,
                (idx >> m) & mask4,
                idx & mask4,
            )
        if m == 5:
            s2, s3 = t["s2"], t["s3"]
            has_i2 = t["pop_i2"] > 0
            has_i3 = t["pop_i3"] > 0
            if s1 >= 8:
                viol_i += int((free & (s2 >= 7) & has_i3).sum())
                viol_i += int((free & (s3 >= 7) & has_i2).sum())
            if s1 >= 7:
                viol_i += int((free & (s2 >= 8) & has_i3).sum())
                viol_i += int((free & (s3 >= 8) & has_i2).sum())
            if pop_i1 > 0:
                viol_i += int((free & (s2 >= 8) & (s3 >= 7)).sum())
                viol_i += int((free & (s3 >= 8) & (s2 >= 7)).sum())
                viol_v += int((free & (s2 + s3 >= 17)).sum())
            viol_v += int((free & (s1 + s2 >= 17) & has_i3).sum())
            viol_v += int((free & (s1 + s3 >= 17) & has_i2).sum())
            if pop_i1 > 0:
                not_saturated = (t["pop_i2"] > 0) & (t["pop_i3"] > 0)
                viol_iii += int((free & (sizes >= 23) & not_saturated).sum())
            full_mu = t["full_mu"] | (pop[a1] == m) | (pop[b1] == m)
            viol_iv += int((free & (sizes >= 22) & ~full_mu).sum())
    return {
        "hist": hist,
        "k4_free": k4_free,
        "viol_i": viol_i,
        "viol_iii": viol_iii,
        "viol_iv": viol_iv,
        "viol_v": viol_v,
        "best": best,
        "best_state": best_state,
    }


def _state_to_multigraph(m: int, state: tuple[int, ...]) -> MMultigraph:
    masks = {pair: mask for pair, mask in zip(_CENSUS_PAIRS, state) if mask}
    return MMultigraph.from_masks(4, m, masks)


@dataclass(frozen=True, slots=True)
class CensusReport:
    """Aggregate of the exhaustive scan over all 4-vertex m-layer states."""

    m: int
    states: int
    k4_free: int
    max_size: int
    max_count: int
    clause_i_violations: int
    clause_iii_violations: int
    clause_iv_violations: int
    clause_v_violations: int
    size_histogram: tuple[int, ...]
    witness: str
    elapsed: float
    workers: int


_CENSUS_CACHE: dict[int, CensusReport] = {}


def k4_census(m: int = 5, workers: int = 1) -> CensusReport:
    """Scan all (2^m)^6 color assignments on 4 vertices.

    Reports the pattern-free maximum size with a lexicographically minimal
    witness, the size histogram of pattern-free states, and (for m=5) the
    violation counts of the four structural clauses, all of which must be
    zero: ordered matching sums (8,7) force an empty intersection on the
    remaining matching, size >= 23 forces a saturated-family subgraph,
    size >= 22 forces a full-multiplicity pair, and matching sums adding to
    17 force an empty intersection.
    """
    if m in _CENSUS_CACHE and _CENSUS_CACHE[m].workers == workers:
        return _CENSUS_CACHE[m]
    start = time.perf_counter()
    blocks = (1 << m) ** 2
    if workers <= 1:
        parts = [_census_range(m, 0, blocks)]
    else:
        step = -(-blocks // workers)
        spans = [(m, lo, min(lo + step, blocks)) for lo in range(0, blocks, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_worker, spans))
    hist = sum(p["hist"] for p in parts)
    best = max(p["best"] for p in parts)
    # ascending spans: the first part attaining the max holds the lex-min state
    best_state = next(p["best_state"] for p in parts if p["best"] == best)
    witness_mg = _state_to_multigraph(m, best_state)
    if witness_mg.size != best or contains_k4(witness_mg) is not None:
        raise AssertionError("census witness failed revalidation")
    report = CensusReport(
        m=m,
        states=(1 << m) ** 6,
        k4_free=sum(p["k4_free"] for p in parts),
        max_size=best,
        max_count=int(hist[best]),
        clause_i_violations=sum(p["viol_i"] for p in parts),
        clause_iii_violations=sum(p["viol_iii"] for p in parts),
        clause_iv_violations=sum(p["viol_iv"] for p in parts),
        clause_v_violations=sum(p["viol_v"] for p in parts),
        size_histogram=tuple(int(x) for x in hist),
        witness=write_mgraph(witness_mg),
        elapsed=time.perf_counter() - start,
        workers=workers,
    )
    _CENSUS_CACHE[m] = report
    return report


def _census_worker(span: tuple[int, int, int]) -> dict:
    return _census_range(*span)


# ----- branch and bound for multigraph Turán numbers -----------------------------


def _bnb_pair_order(n: int) -> list[tuple[int, int]]:
    """Pairs ordered so 4-vertex subsets complete as early as possible."""
    order = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)]
    for v in range(4, n):
        order.extend((u, v) for u in range(v))
    return order


def _sdr_exists(i1: int, i2: int, i3: int, pop) -> bool:
    return (
        pop[i1] >= 1
        and pop[i2] >= 1
        and pop[i3] >= 1
        and pop[i1 | i2] >= 2
        and pop[i1 | i3] >= 2
        and pop[i2 | i3] >= 2
        and pop[i1 | i2 | i3] >= 3
    )


def max_k4free_multigraph(
    n: int,
    m: int,
    engine: str = "exhaustive",
    budget: float | None = None,
    workers: int = 1,
) -> SearchReport:
    """Maximum size of a pattern-free m-layer multigraph on n vertices.

    The exhaustive engine supports n=4 only (full census). Branch and bound
    supports n in {4, 5}: depth-first over pair color masks in a fixed order,
    the first pair pinned to prefix masks of maximal multiplicity (every
    assignment can be relabeled so a maximum-multiplicity pair comes first
    with a downward-closed color set), pruning by remaining-pair capacity and
    by the census ceiling on each 4-subset. A budget (seconds) turns the
    report incomplete instead of raising.
    """
    start = time.perf_counter()
    if engine == "exhaustive":
        if n != 4:
            raise ValueError("exhaustive engine requires n=4")
        census = k4_census(m, workers=workers)
        return SearchReport(
            objective="k4multi",
            n=4,
            m=m,
            optimum=census.max_size,
            witness=census.witness,
            witness_kind="mgraph",
            nodes=census.states,
            elapsed=time.perf_counter() - start,
            complete=True,
            engine="exhaustive",
            params={"workers": workers},
        )
    if engine != "bnb":
        raise ValueError(f"unknown engine {engine!r}")
    if n not in (4, 5):
        raise ValueError("branch and bound supports n in {4, 5}")

    pairs = _bnb_pair_order(n)
    index = {p: i for i, p in enumerate(pairs)}
    total = len(pairs)
    pop = [x.bit_count() for x in range(1 << m)]
    quads = []
    for quad in combinations(range(n), 4):
        a, b, c, d = quad
        mpairs = (
            (index[(a, b)], index[(c, d)]),
            (index[(a, c)], index[(b, d)]),
            (index[(a, d)], index[(b, c)]),
        )
        members = sorted(i for pair in mpairs for i in pair)
        quads.append({"matchings": mpairs, "members": members, "last": members[-1]})
    completes_at: dict[int, list[dict]] = {}
    for q in quads:
        completes_at.setdefault(q["last"], []).append(q)
    quad_cap = k4_census(m).max_size if n == 5 else 6 * m

    # incumbent seeding: the identical-layer construction when it applies
    if n == 5 and m == 5:
        seed = turan_layers_5(5)
        best = seed.size
        best_masks = [seed.mask(u, v) for u, v in pairs]
    else:
        best = -1
        best_masks = None

    masks = [0] * total
    nodes = 0
    deadline = None if budget is None else start + budget
    complete = True
    descending = sorted(range(1 << m), key=lambda x: (-pop[x], x))
    root_masks = [(1 << k) - 1 for k in range(m, -1, -1)]

    # every pair of K5 lies in 3 of the 5 quads; of K4 in its single quad
    quads_per_pair = 3 if n == 5 else 1

    def upper_bound(depth: int, size: int) -> int:
        ub1 = size + m * (total - depth)
        ub2_sum = 0
        for q in quads:
            cur = 0
            unassigned = 0
            for i in q["members"]:
                if i < depth:
                    cur += pop[masks[i]]
                else:
                    unassigned += 1
            ub2_sum += min(quad_cap, cur + m * unassigned)
        return min(ub1, ub2_sum // quads_per_pair)

    def descend(depth: int, size: int) -> None:
        nonlocal best, best_masks, nodes, complete
        if deadline is not None and nodes % 4096 == 0 and time.perf_counter() > deadline:
            complete = False
            return
        if depth == total:
            if size > best:
                best = size
                best_masks = masks.copy()
            return
        candidates = root_masks if depth == 0 else descending
        limit = pop[masks[0]] if depth > 0 else m
        for mask in candidates:
            if pop[mask] > limit:
                continue
            nodes += 1
            masks[depth] = mask
            new_size = size + pop[mask]
            if new_size + m * (total - depth - 1) <= best:
                continue
            bad = False
            for q in completes_at.get(depth, ()):
                isets = [
                    masks[i] & masks[j] for i, j in q["matchings"]
                ]
                if _sdr_exists(isets[0], isets[1], isets[2], pop):
                    bad = True
                    break
            if bad:
                continue
            if upper_bound(depth + 1, new_size) <= best:
                continue
            descend(depth + 1, new_size)
            if not complete:
                return
        masks[depth] = 0

    descend(0, 0)
    if best_masks is None:
        raise AssertionError("search ended with no feasible state")
    witness_mg = MMultigraph.from_masks(
        n, m, {p: mk for p, mk in zip(pairs, best_masks) if mk}
    )
    if witness_mg.size != best or contains_k4(witness_mg) is not None:
        raise AssertionError("branch-and-bound witness failed revalidation")
    return SearchReport(
        objective="k4multi",
        n=n,
        m=m,
        optimum=best,
        witness=write_mgraph(witness_mg),
        witness_kind="mgraph",
        nodes=nodes,
        elapsed=time.perf_counter() - start,
        complete=complete,
        engine="bnb",
        params={"budget": budget},
    )


# ----- two-edge-star maxima over all small graphs ---------------------------------


_S2_TABLE_CACHE: dict[int, dict] = {}


def _graph_star_table(n: int) -> dict:
    """For every edge count m, the exhaustive max of the two-edge-star count
    over all n-vertex graphs, with the first attaining adjacency mask."""
    if n in _S2_TABLE_CACHE:
        return _S2_TABLE_CACHE[n]
    pairs = all_pairs(n)
    nbits = len(pairs)
    incidence = [
        sum(1 << i for i, (u, v) in enumerate(pairs) if w in (u, v))
        for w in range(n)
    ]
    masks = np.arange(1 << nbits, dtype=np.uint32)
    choose2 = np.array([d * (d - 1) // 2 for d in range(n)], dtype=np.uint16)
    stars = np.zeros(len(masks), dtype=np.uint16)
    for w in range(n):
        stars += choose2[np.bitwise_count(masks & np.uint32(incidence[w]))]
    edge_counts = np.bitwise_count(masks).astype(np.uint8)
    table: dict[int, tuple[int, int]] = {}
    for m in range(nbits + 1):
        sel = edge_counts == m
        vals = stars[sel]
        best = int(vals.max())
        first = int(masks[sel][int(np.argmax(vals == best))])
        table[m] = (best, first)
    result = {"pairs": pairs, "table": table, "states": len(masks)}
    _S2_TABLE_CACHE[n] = result
    return result


def _mask_to_graph(n: int, pairs, mask: int) -> SimpleGraph:
    return SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def max_s2_graph(n: int, m_edges: int, budget_ok: bool = False) -> SearchReport:
    """Exhaustive maximum of the two-edge-star count over n-vertex graphs
    with exactly m_edges edges. Capacity-capped at n <= 7 unless budget_ok."""
    start = time.perf_counter()
    if n > 8 or (n == 8 and not budget_ok):
        raise ValueError(f"vertex count {n} above scan capacity")
    if not 0 <= m_edges <= comb(n, 2):
        raise ValueError(f"edge count {m_edges} out of range")
    data = _graph_star_table(n)
    best, mask = data["table"][m_edges]
    witness = _mask_to_graph(n, data["pairs"], mask)
    if witness.star_count(2) != best or witness.edge_count != m_edges:
        raise AssertionError("star-count witness failed revalidation")
    return SearchReport(
        objective="ak-s2",
        n=n,
        m=m_edges,
        optimum=best,
        witness=write_graph(witness),
        witness_kind="graph",
        nodes=data["states"],
        elapsed=time.perf_counter() - start,
        complete=True,
        engine="exhaustive",
        params={},
    )


def s2_quasi_agreement(n: int = 7) -> list[tuple[int, int, int, int]]:
    """Rows (m, exhaustive max, quasi-star count, quasi-complete count) for
    every edge count; the exhaustive max must equal the larger of the two."""
    data = _graph_star_table(n)
    rows = []
    for m in range(comb(n, 2) + 1):
        best = data["table"][m][0]
        star = quasi_star(n, m).star_count(2)
        clique = quasi_complete(n, m).star_count(2)
        rows.append((m, best, star, clique))
    return rows


# ----- minimum-degree bipartiteness scan -------------------------------------------


@dataclass(frozen=True, slots=True)
class AesReport:
    """Exhaustive check that triangle-free graphs of high minimum degree
    are bipartite, with boundary statistics."""

    n: int
    states: int
    triangle_free: int
    above_threshold: int
    violations: int
    boundary_nonbipartite: int
    elapsed: float


def aes_scan(n: int, budget_ok: bool = False) -> AesReport:
    """Scan all n-vertex graphs: every triangle-free graph with minimum
    degree above 2n/5 must be bipartite. Also counts the non-bipartite
    triangle-free graphs sitting exactly at degree floor(2n/5), which stop
    the threshold from moving."""
    start = time.perf_counter()
    if n > 8 or (n == 8 and not budget_ok):
        raise ValueError(f"vertex count {n} above scan capacity")
    pairs = all_pairs(n)
    nbits = len(pairs)
    masks = np.arange(1 << nbits, dtype=np.uint32)
    triangle_free = np.ones(len(masks), dtype=bool)
    for a, b, c in combinations(range(n), 3):
        t = np.uint32(
            (1 << pairs.index((a, b)))
            | (1 << pairs.index((a, c)))
            | (1 << pairs.index((b, c)))
        )
        triangle_free &= (masks & t) != t
    mindeg = np.full(len(masks), 255, dtype=np.uint8)
    incidence = [
        sum(1 << i for i, (u, v) in enumerate(pairs) if w in (u, v))
        for w in range(n)
    ]
    for w in range(n):
        deg = np.bitwise_count(masks & np.uint32(incidence[w])).astype(np.uint8)
        mindeg = np.minimum(mindeg, deg)
    above = triangle_free & (5 * mindeg.astype(np.int32) > 2 * n)
    violations = 0
    for mask in masks[above]:
        if _mask_to_graph(n, pairs, int(mask)).bipartition() is None:
            violations += 1
    boundary = triangle_free & (mindeg == (2 * n) // 5)
    boundary_nonbip = 0
    for mask in masks[boundary]:
        if _mask_to_graph(n, pairs, int(mask)).bipartition() is None:
            boundary_nonbip += 1
    return AesReport(
        n=n,
        states=len(masks),
        triangle_free=int(triangle_free.sum()),
        above_threshold=int(above.sum()),
        violations=violations,
        boundary_nonbipartite=boundary_nonbip,
        elapsed=time.perf_counter() - start,
    )


# ----- maximum-norm Fano-free search ------------------------------------------------


def _fano_copy_masks() -> list[int]:
    """Edge-subset masks (over the 35 triples of 7 vertices) of all labeled
    Fano planes."""
    triples = list(combinations(range(7), 3))
    tindex = {t: i for i, t in enumerate(triples)}
    seen = set()
    for perm in permutations(range(7)):
        mask = 0
        for a, b, c in FANO_EDGES:
            mask |= 1 << tindex[tuple(sorted((perm[a], perm[b], perm[c])))]
        seen.add(mask)
    return sorted(seen)


def max_l2_fano_free(n: int, budget: float | None = None) -> SearchReport:
    """Maximum squared norm of a Fano-free 3-graph on n vertices.

    For n <= 6 the complete 3-graph wins outright (the pattern needs seven
    vertices and the norm grows with every added edge). For n = 7 every
    Fano-free graph is the complete graph minus an edge set hitting all 30
    labeled copies, and the norm is monotone, so the search branches over
    which edge of the first uncovered copy gets deleted, pruning when the
    norm after current deletions cannot beat the incumbent.
    """
    start = time.perf_counter()
    if n < 3 or n > 7:
        raise ValueError("supported vertex counts are 3..7")
    if n <= 6:
        host = complete3(n)
        return SearchReport(
            objective="fano-l2",
            n=n,
            m=None,
            optimum=host.lp_norm(2),
            witness=write_3graph(host),
            witness_kind="3graph",
            nodes=1,
            elapsed=time.perf_counter() - start,
            complete=True,
            engine="closed",
            params={},
        )

    triples = list(combinations(range(7), 3))
    fanos = _fano_copy_masks()
    pair_index = {p: i for i, p in enumerate(all_pairs(7))}
    triple_pairs = [
        (pair_index[(a, b)], pair_index[(a, c)], pair_index[(b, c)])
        for a, b, c in triples
    ]
    codegrees = [5] * 21
    norm = sum(5 * 5 for _ in range(21))  # 525 on K7

    def deletion_cost(t: int) -> int:
        return sum(2 * codegrees[p] - 1 for p in triple_pairs[t])

    def apply_delete(t: int) -> None:
        nonlocal norm
        for p in triple_pairs[t]:
            norm -= 2 * codegrees[p] - 1
            codegrees[p] -= 1

    def undo_delete(t: int) -> None:
        nonlocal norm
        for p in triple_pairs[t]:
            codegrees[p] += 1
            norm += 2 * codegrees[p] - 1

    best = -1
    best_deleted: int | None = None
    nodes = 0
    deadline = None if budget is None else start + budget
    complete = True

    def descend(deleted: int, forbidden: int) -> None:
        nonlocal best, best_deleted, nodes, complete
        nodes += 1
        if deadline is not None and nodes % 1024 == 0 and time.perf_counter() > deadline:
            complete = False
            return
        uncovered = next((f for f in fanos if not f & deleted), None)
        if uncovered is None:
            if norm > best:
                best = norm
                best_deleted = deleted
            return
        if not uncovered & ~forbidden:
            return
        banned = forbidden
        for t in range(35):
            bit = 1 << t
            if not uncovered & bit or banned & bit:
                continue
            if norm - deletion_cost(t) > best:
                apply_delete(t)
                descend(deleted | bit, banned)
                undo_delete(t)
                if not complete:
                    return
            banned |= bit

    descend(0, 0)
    if best_deleted is None:
        raise AssertionError("no hitting set found")
    host = Uniform3Graph(
        7, [t for i, t in enumerate(triples) if not best_deleted >> i & 1]
    )
    if host.lp_norm(2) != best or contains_fano(host) is not None:
        raise AssertionError("maximum-norm witness failed revalidation")
    return SearchReport(
        objective="fano-l2",
        n=7,
        m=None,
        optimum=best,
        witness=write_3graph(host),
        witness_kind="3graph",
        nodes=nodes,
        elapsed=time.perf_counter() - start,
        complete=complete,
        engine="bnb",
        params={"budget": budget},
    )


# ----- bipartite norm scans -----------------------------------------------------------


def canonical_3graph(H: Uniform3Graph) -> tuple[tuple[int, int, int], ...]:
    """Lexicographically minimal relabeling of the edge set; equal exactly
    for isomorphic graphs (intended for small n)."""
    best = None
    for perm in permutations(range(H.n)):
        relabeled = tuple(
            sorted(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in H.triples())
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


@dataclass(frozen=True, slots=True)
class BipartiteScanReport:
    """Exhaustive maximum of the squared norm over bipartite 3-graphs."""

    n: int
    max_norm: int
    closed_value: int
    maximizer_count: int
    unique_up_to_iso: bool
    witness: str
    states: int
    elapsed: float


def bipartite_l2_scan(n: int) -> BipartiteScanReport:
    """Scan every bipartition (vertex 0 pinned to the first part) and every
    subset of its crossing triples; the maximum squared norm must match the
    closed formula, attained only by balanced complete bipartite graphs."""
    start = time.perf_counter()
    if n > 6:
        raise ValueError(f"vertex count {n} above scan capacity")
    pairs = all_pairs(n)
    best = -1
    maximizers: list[Uniform3Graph] = []
    states = 0
    for subset in range(1 << (n - 1)):
        part2 = [v for v in range(1, n) if subset >> (v - 1) & 1]
        part1 = [v for v in range(n) if v not in part2]
        cross = [
            t
            for t in combinations(range(n), 3)
            if any(v in part1 for v in t) and any(v in part2 for v in t)
        ]
        if not cross:
            continue
        masks = np.arange(1 << len(cross), dtype=np.uint32)
        states += len(masks)
        norms = np.zeros(len(masks), dtype=np.int64)
        for pi, (u, v) in enumerate(pairs):
            pmask = sum(1 << i for i, t in enumerate(cross) if u in t and v in t)
            if pmask:
                d = np.bitwise_count(masks & np.uint32(pmask)).astype(np.int64)
                norms += d * d
        block_best = int(norms.max())
        if block_best < best:
            continue
        hit = [
            Uniform3Graph(n, [t for i, t in enumerate(cross) if mask >> i & 1])
            for mask in masks[norms == block_best]
        ]
        if block_best > best:
            best = block_best
            maximizers = hit
        else:
            maximizers.extend(hit)
    # the same labeled graph may be crossing for two bipartitions
    distinct = {H.triples(): H for H in maximizers}
    maximizers = [distinct[k] for k in sorted(distinct)]
    canon = {canonical_3graph(H) for H in maximizers}
    balanced = canonical_3graph(bipartite3((n + 1) // 2, n // 2))
    return BipartiteScanReport(
        n=n,
        max_norm=best,
        closed_value=bn_l2_closed(n),
        maximizer_count=len(maximizers),
        unique_up_to_iso=canon == {balanced},
        witness=write_3graph(maximizers[0]),
        states=states,
        elapsed=time.perf_counter() - start,
    )


def bipartite_norm_formula(a: int, b: int) -> int:
    """Closed squared norm of the complete bipartite 3-graph with parts a, b."""
    n = a + b
    return comb(a, 2) * b * b + comb(b, 2) * a * a + a * b * (n - 2) ** 2


def bipartite_s2_formula(a: int, b: int) -> int:
    """Closed two-edge-star count of the same graph."""
    n = a + b
    return 2 * comb(a, 2) * comb(b, 2) + a * b * comb(n - 2, 2)


@dataclass(frozen=True, slots=True)
class SplitScanReport:
    """Part-size scan over complete bipartite 3-graphs."""

    n: int
    norm_argmax: tuple[int, ...]
    s2_argmax: tuple[int, ...]
    balanced_wins_norm: bool
    balanced_wins_s2: bool


def complete_bipartite_argmax(n: int) -> SplitScanReport:
    """Which part sizes maximize the squared norm and the two-edge-star count
    over complete bipartite 3-graphs with parts (a, n-a)."""
    if not 2 <= n <= 40:
        raise ValueError("supported range is 2..40")
    norms = {a: bipartite_norm_formula(a, n - a) for a in range(1, n)}
    stars = {a: bipartite_s2_formula(a, n - a) for a in range(1, n)}
    nmax = max(norms.values())
    smax = max(stars.values())
    narg = tuple(sorted(a for a, v in norms.items() if v == nmax))
    sarg = tuple(sorted(a for a, v in stars.items() if v == smax))
    balanced = {n // 2, (n + 1) // 2}
    return SplitScanReport(
        n=n,
        norm_argmax=narg,
        s2_argmax=sarg,
        balanced_wins_norm=set(narg) == balanced,
        balanced_wins_s2=set(sarg) == balanced,
    )


# ----- seeded samplers ------------------------------------------------------------------


def random_sub_multigraph(mg: MMultigraph, rng, keep_prob: float = 0.9) -> MMultigraph:
    """Independently keep each color of each pair with the given probability."""
    masks: dict[tuple[int, int], int] = {}
    for pair, mask in mg.pairs():
        kept = 0
        for i in range(mg.m):
            if mask >> i & 1 and rng.random() < keep_prob:
                kept |= 1 << i
        if kept:
            masks[pair] = kept
    return MMultigraph.from_masks(mg.n, mg.m, masks)
