"""Forbidden-pattern detection for 3-graphs.

Backtracking embedding search for fixed patterns (the Fano plane, the
complete 3-graph on five vertices, or anything loaded from a file),
bipartiteness testing, and the two link-based necessary conditions satisfied
by every Fano-free host: no edge whose three links stack into the
three-matching multigraph pattern, and no vertex whose link holds three
disjoint edges with all eight crossing triples present.
"""

from __future__ import annotations

from itertools import combinations, product

from .hypergraphs import Uniform3Graph
from .multigraphs import K4Witness, MMultigraph, contains_k4

FANO_EDGES = (
    (0, 1, 2),
    (2, 3, 4),
    (4, 5, 0),
    (0, 6, 3),
    (1, 6, 4),
    (2, 6, 5),
    (1, 3, 5),
)


def fano_plane() -> Uniform3Graph:
    """The Fano plane: 7 points, 7 lines, every point on 3 lines."""
    return Uniform3Graph(7, FANO_EDGES)


class Pattern3:
    """An embedding target with precomputed branching order and prune tables.

    Pattern vertices are branched in descending degree order (ties by index).
    For each branching position the constructor records which earlier-placed
    vertices share edges (for codegree pruning) and which pattern edges become
    fully placed (for exact membership checks).
    """

    __slots__ = ("graph", "order", "_earlier", "_completed")

    def __init__(self, graph: Uniform3Graph) -> None:
        self.graph = graph
        self.order = tuple(
            sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
        )
        pos = {v: t for t, v in enumerate(self.order)}
        earlier: list[tuple[tuple[int, int], ...]] = []
        for t, p in enumerate(self.order):
            pairs = []
            for s in range(t):
                q = self.order[s]
                c = graph.codegree(p, q)
                if c:
                    pairs.append((q, c))
            earlier.append(tuple(pairs))
        self._earlier = tuple(earlier)
        completed: list[list[tuple[int, int, int]]] = [[] for _ in range(graph.n)]
        for triple in graph.triples():
            completed[max(pos[x] for x in triple)].append(triple)
        self._completed = tuple(tuple(es) for es in completed)


_FANO_PATTERN: Pattern3 | None = None
_K53_PATTERN: Pattern3 | None = None


def contains_pattern(
    host: Uniform3Graph, pattern: Uniform3Graph | Pattern3
) -> tuple[int, ...] | None:
    """Injective edge-preserving embedding of pattern into host, or None.

    The returned tuple maps pattern vertex i to host vertex witness[i]. The
    witness is the lexicographically first assignment under the pattern's
    fixed branching order, so repeated runs agree exactly.
    """
    pat = pattern if isinstance(pattern, Pattern3) else Pattern3(pattern)
    g = pat.graph
    if g.n > host.n or g.edge_count > host.edge_count:
        return None
    if g.n == 0:
        return ()
    witness = [-1] * g.n
    used = bytearray(host.n)
    host_degrees = host.degrees()

    def extend(t: int) -> bool:
        if t == g.n:
            return True
        p = pat.order[t]
        dp = g.degree(p)
        for h in range(host.n):
            if used[h] or host_degrees[h] < dp:
                continue
            ok = True
            for q, c in pat._earlier[t]:
                if host.codegree(h, witness[q]) < c:
                    ok = False
                    break
            if ok:
                for triple in pat._completed[t]:
                    a, b, c3 = (h if x == p else witness[x] for x in triple)
                    if not host.has_edge(a, b, c3):
                        ok = False
                        break
            if ok:
                witness[p] = h
                used[h] = 1
                if extend(t + 1):
                    return True
                used[h] = 0
                witness[p] = -1
        return False

    return tuple(witness) if extend(0) else None


def contains_fano(host: Uniform3Graph) -> tuple[int, ...] | None:
    """Embedding of the Fano plane into host, or None."""
    global _FANO_PATTERN
    if _FANO_PATTERN is None:
        _FANO_PATTERN = Pattern3(fano_plane())
    return contains_pattern(host, _FANO_PATTERN)


def contains_k53(host: Uniform3Graph) -> tuple[int, ...] | None:
    """Embedding of the complete 3-graph on 5 vertices into host, or None."""
    global _K53_PATTERN
    if _K53_PATTERN is None:
        _K53_PATTERN = Pattern3(
            Uniform3Graph(5, combinations(range(5), 3))
        )
    return contains_pattern(host, _K53_PATTERN)


# ----- bipartiteness ---------------------------------------------------------


def is_bipartite3(
    H: Uniform3Graph, max_n: int = 30
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A vertex bipartition leaving no edge inside either part, or None.

    Branches on the lowest unassigned vertex with unit propagation: an edge
    with two vertices settled on one side forces its third vertex to the
    other side. Vertex 0 is pinned to the first part, which costs nothing
    since the two sides are exchangeable.
    """
    if H.n > max_n:
        raise ValueError(f"vertex count {H.n} above bipartiteness cap {max_n}")
    if H.n == 0:
        return ((), ())

    def propagate(side: list[int], v: int) -> bool:
        stack = [v]
        while stack:
            x = stack.pop()
            for triple in H.triples_containing(x):
                assigned = [side[y] for y in triple]
                free = [y for y in triple if side[y] < 0]
                for s in (0, 1):
                    if assigned.count(s) == 3:
                        return False
                    if assigned.count(s) == 2 and len(free) == 1:
                        y = free[0]
                        side[y] = 1 - s
                        stack.append(y)
        return True

    def extend(side: list[int]) -> list[int] | None:
        try:
            v = side.index(-1)
        except ValueError:
            return side
        for s in (0, 1):
            trial = side.copy()
            trial[v] = s
            if propagate(trial, v):
                result = extend(trial)
                if result is not None:
                    return result
        return None

    side0 = [-1] * H.n
    side0[0] = 0
    if not propagate(side0, 0):
        return None
    final = extend(side0)
    if final is None:
        return None
    part1 = tuple(v for v in range(H.n) if final[v] == 0)
    part2 = tuple(v for v in range(H.n) if final[v] == 1)
    return part1, part2


# ----- link-based necessary conditions ---------------------------------------


def link_matching_violation(
    H: Uniform3Graph, v: int
) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]] | None:
    """Three pairwise disjoint link edges of v whose eight crossing triples
    are all edges of H, or None. Any such triple of link edges extends to a
    Fano plane through v, so a Fano-free host never produces one."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range")
    link_edges = H.link(v).edges()
    for e1, e2, e3 in combinations(link_edges, 3):
        if len({*e1, *e2, *e3}) != 6:
            continue
        if all(H.has_edge(a, b, c) for a, b, c in product(e1, e2, e3)):
            return e1, e2, e3
    return None


def link_matching_check(H: Uniform3Graph, v: int) -> bool:
    """True when no three disjoint link edges of v have all eight crossing
    triples present."""
    return link_matching_violation(H, v) is None


def edge_link_multigraph(H: Uniform3Graph, edge: tuple[int, int, int]) -> MMultigraph:
    """The 3-layer multigraph stacking the links of an edge's three vertices
    (in increasing vertex order) over the host's vertex set."""
    x, y, z = sorted(edge)
    if len({x, y, z}) != 3 or not (0 <= x and z < H.n):
        raise ValueError(f"invalid vertex triple {edge}")
    masks: dict[tuple[int, int], int] = {}
    for i, v in enumerate((x, y, z)):
        for pair in H.link(v).edges():
            masks[pair] = masks.get(pair, 0) | 1 << i
    return MMultigraph.from_masks(H.n, 3, masks)


def link_triple_violation(
    H: Uniform3Graph,
) -> tuple[tuple[int, int, int], K4Witness] | None:
    """First edge whose three stacked links contain the three-matching
    pattern, with the pattern witness, or None. Fano-free hosts never
    produce one."""
    for edge in H.triples():
        w = contains_k4(edge_link_multigraph(H, edge))
        if w is not None:
            return edge, w
    return None
