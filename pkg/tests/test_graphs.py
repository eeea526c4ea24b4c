from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from fano_l2.graphs import (
    SimpleGraph,
    all_pairs,
    clique_plus_isolated,
    complete_bipartite,
    complete_minus_clique,
    complete_split_plus_isolated,
    quasi_complete,
    quasi_star,
)


@st.composite
def small_graphs(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    pairs = all_pairs(n)
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, edges)


def test_basic_structure():
    g = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count == 3
    assert g.degrees() == (1, 2, 2, 1)
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert sorted(g.neighbors(2)) == [1, 3]


@given(small_graphs())
def test_star_count_matches_degree_binomials(g):
    assert g.star_count(2) == sum(comb(d, 2) for d in g.degrees())
    assert g.star_count(3) == sum(comb(d, 3) for d in g.degrees())


@given(small_graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.edge_count + g.complement().edge_count == comb(g.n, 2)


def test_triangle_and_bipartition():
    tri = SimpleGraph(4, [(0, 1), (0, 2), (1, 2)])
    assert tri.triangle() == (0, 1, 2)
    assert tri.bipartition() is None
    even_cycle = SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert even_cycle.triangle() is None
    parts = even_cycle.bipartition()
    assert parts is not None and set(parts[0]) == {0, 2}
    odd_cycle = SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert odd_cycle.bipartition() is None


def test_construction_edge_counts():
    assert clique_plus_isolated(7, 3).edge_count == 3
    assert complete_minus_clique(7, 3).edge_count == comb(7, 2) - comb(3, 2)
    assert complete_split_plus_isolated(10, 2, 3).edge_count == 9
    assert complete_bipartite(3, 4).edge_count == 12
    # the independent part really is independent
    s = complete_minus_clique(6, 4)
    assert s.is_independent_set(range(4))


@given(st.integers(2, 8), st.integers(0, 28))
def test_quasi_families_are_complements(n, m):
    if m > comb(n, 2):
        m = comb(n, 2)
    qs = quasi_star(n, m)
    qc = quasi_complete(n, comb(n, 2) - m)
    assert qs.edge_count == m
    assert qs == qc.complement()


def test_quasi_star_exact_two_edge_stars():
    # brute check on n=5: dominating vertices added one edge at a time
    for m in range(comb(5, 2) + 1):
        g = quasi_star(5, m)
        assert g.edge_count == m
        assert g.star_count(2) == sum(comb(d, 2) for d in g.degrees())


def test_bad_parameters_rejected():
    with pytest.raises(ValueError):
        clique_plus_isolated(3, 4)
    with pytest.raises(ValueError):
        complete_split_plus_isolated(4, 3, 2)
    with pytest.raises(ValueError):
        quasi_complete(4, 7)
