import random
from itertools import combinations
from math import comb

import pytest

from fano_l2.formats import parse_3graph, parse_graph, parse_mgraph
from fano_l2.graphs import SimpleGraph
from fano_l2.hypergraphs import bipartite3, bn_l2_closed
from fano_l2.multigraphs import bipartite_construction_5, contains_k4
from fano_l2.patterns import contains_fano
from fano_l2.search import (
    aes_scan,
    bipartite_l2_scan,
    bipartite_norm_formula,
    bipartite_s2_formula,
    canonical_3graph,
    complete_bipartite_argmax,
    k4_census,
    max_k4free_multigraph,
    max_l2_fano_free,
    max_s2_graph,
    random_sub_multigraph,
    s2_quasi_agreement,
)


def test_census_m4_frozen_values():
    rep = k4_census(4)
    assert rep.states == 16**6
    assert rep.k4_free == 13110579
    assert rep.max_size == 20
    assert rep.max_count == 48
    assert rep.size_histogram[20] == 48
    assert sum(rep.size_histogram) == rep.k4_free
    witness = parse_mgraph(rep.witness)
    assert witness.size == 20 and contains_k4(witness) is None


def test_census_worker_split_matches_serial():
    serial = k4_census(4, workers=1)
    split = k4_census(4, workers=2)
    for field in ("states", "k4_free", "max_size", "max_count", "size_histogram", "witness"):
        assert getattr(serial, field) == getattr(split, field)


def test_bnb_agrees_with_census_at_four_vertices():
    for m in (2, 3, 4):
        census_best = k4_census(m).max_size
        rep = max_k4free_multigraph(4, m, engine="bnb")
        assert rep.complete
        assert rep.optimum == census_best
        w = parse_mgraph(rep.witness)
        assert w.size == rep.optimum and contains_k4(w) is None


def test_small_multigraph_turan_values():
    assert max_k4free_multigraph(4, 2, engine="bnb").optimum == 12
    assert max_k4free_multigraph(4, 3, engine="bnb").optimum == 15
    assert max_k4free_multigraph(4, 4, engine="bnb").optimum == 20
    exhaustive = max_k4free_multigraph(4, 3, engine="exhaustive")
    assert exhaustive.optimum == 15


def brute_max_s2(n, m):
    pairs = list(combinations(range(n), 2))
    best = -1
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") != m:
            continue
        g = SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        best = max(best, g.star_count(2))
    return best


def test_s2_search_matches_brute_force_n5():
    for m in range(comb(5, 2) + 1):
        rep = max_s2_graph(5, m)
        assert rep.optimum == brute_max_s2(5, m)
        w = parse_graph(rep.witness)
        assert w.edge_count == m and w.star_count(2) == rep.optimum


def test_s2_quasi_agreement_rows():
    rows = s2_quasi_agreement(6)
    assert len(rows) == comb(6, 2) + 1
    for m, best, star, clique in rows:
        assert best == max(star, clique)


def test_s2_capacity_guard():
    with pytest.raises(ValueError):
        max_s2_graph(8, 3)
    with pytest.raises(ValueError):
        max_s2_graph(5, 11)


def test_aes_scan_small_values():
    a5 = aes_scan(5)
    assert (a5.states, a5.triangle_free, a5.violations) == (1024, 388, 0)
    assert a5.boundary_nonbipartite == 12  # the labeled pentagons
    a6 = aes_scan(6)
    assert (a6.states, a6.triangle_free, a6.violations) == (32768, 5789, 0)
    assert a6.above_threshold == 10  # the labeled 3,3 bipartite doublings
    with pytest.raises(ValueError):
        aes_scan(8)


def test_fano_free_optima_small():
    for n, expect in ((3, 1), (4, 4), (5, 90), (6, 240)):
        rep = max_l2_fano_free(n)
        if n >= 5:
            assert rep.optimum == expect
        w = parse_3graph(rep.witness)
        assert contains_fano(w) is None
        assert w.lp_norm(2) == rep.optimum


def test_fano_free_small_hosts_are_complete():
    # below 7 vertices nothing can carry the 7-point plane, so the complete
    # host wins: 3^2 per shadow pair at n=5, 4^2 at n=6
    from fano_l2.hypergraphs import complete3

    for n in (5, 6):
        rep = max_l2_fano_free(n)
        assert rep.optimum == complete3(n).lp_norm(2)
        assert rep.optimum > bn_l2_closed(n)


def test_canonical_form_identifies_relabelings():
    h = bipartite3(3, 2)
    relabeled = parse_3graph("3graph 5\n" + "".join(
        f"{a} {b} {c}\n" for a, b, c in sorted(
            tuple(sorted((4 - x, 4 - y, 4 - z))) for x, y, z in h.triples())))
    assert canonical_3graph(h) == canonical_3graph(relabeled)


def test_bipartite_scan_values():
    for n, norm, count in ((3, 3, 1), (4, 24, 1), (5, 75, 10)):
        rep = bipartite_l2_scan(n)
        assert rep.max_norm == norm
        assert rep.closed_value == bn_l2_closed(n)
        assert rep.maximizer_count == count
        assert rep.unique_up_to_iso
        w = parse_3graph(rep.witness)
        assert w.lp_norm(2) == norm


def test_bipartite_formulas_match_constructions():
    for a in range(1, 6):
        for b in range(1, 6):
            h = bipartite3(a, b)
            assert h.lp_norm(2) == bipartite_norm_formula(a, b)
            assert h.count_stars(2) == bipartite_s2_formula(a, b)


def test_balanced_split_wins():
    for n in (5, 8, 13, 20):
        rep = complete_bipartite_argmax(n)
        assert rep.balanced_wins_norm and rep.balanced_wins_s2
        assert set(rep.norm_argmax) == {n // 2, (n + 1) // 2}
        assert set(rep.s2_argmax) == {n // 2, (n + 1) // 2}


def test_random_sub_multigraph_is_contained(rng):
    mg = bipartite_construction_5(8)
    for _ in range(20):
        sub = random_sub_multigraph(mg, rng, keep_prob=0.5)
        assert sub.n == mg.n and sub.m == mg.m
        for u in range(8):
            for v in range(u + 1, 8):
                assert sub.mask(u, v) & ~mg.mask(u, v) == 0
