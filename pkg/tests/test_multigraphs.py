import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from fano_l2.multigraphs import (
    MMultigraph,
    bipartite_construction_5,
    contains_k4,
    extract_dense_core,
    find_good_partition,
    find_nice_partition,
    has_heavy_triple,
    is_certificate_valid,
    is_k4_free,
    is_subgraph_of_saturated,
    nice_partition_size_bound,
    saturated_family_4,
    triple_type,
    turan_layers_5,
    verify_k4_witness,
)


def random_multigraph(n, m, rng, keep=0.6):
    masks = {}
    for u in range(n):
        for v in range(u + 1, n):
            mask = rng.getrandbits(m) if rng.random() < keep else 0
            if mask:
                masks[(u, v)] = mask
    return MMultigraph.from_masks(n, m, masks)


def test_constructor_validation():
    with pytest.raises(ValueError):
        MMultigraph(3, 5, {(0, 3): [1]})
    with pytest.raises(ValueError):
        MMultigraph(3, 5, {(0, 1): [6]})
    with pytest.raises(ValueError):
        MMultigraph(3, 5, {(0, 1): [1], (1, 0): [2]})
    with pytest.raises(ValueError):
        MMultigraph.from_masks(3, 5, {(0, 1): 0b100000})


def test_access_and_layers():
    mg = MMultigraph(4, 5, {(0, 1): [1, 3], (2, 3): [5], (1, 2): [2]})
    assert mg.mask(1, 0) == 0b101
    assert mg.colors(0, 1) == (1, 3)
    assert mg.multiplicity(0, 1) == 2
    assert mg.size == 4
    assert mg.degree(1) == 3
    assert mg.degrees() == (2, 3, 2, 1)
    assert mg.min_degree() == 1
    assert mg.layer(3).edges() == ((0, 1),)
    sub = mg.induced([1, 2, 3])
    assert sub.n == 3 and sub.size == 2
    assert sub.mask(0, 1) == 0b10  # relabeled pair (1,2)


def test_turan_layers_k4_free_and_size():
    for n in range(3, 11):
        tl = turan_layers_5(n)
        assert tl.size == 5 * (n * n // 3)
        assert contains_k4(tl) is None


def test_bipartite_construction_size_and_k4():
    for n in range(2, 11):
        bc = bipartite_construction_5(n)
        assert bc.size == 2 * comb(n, 2) + 3 * (n * n // 4)
        assert is_k4_free(bc)


def test_saturated_family_size_and_freeness():
    family = saturated_family_4()
    assert len(family) == 96
    assert len(set(family)) == 96
    for member in family:
        assert member.size == 25
        assert contains_k4(member) is None
        assert is_subgraph_of_saturated(member)


def test_adding_any_pair_to_saturated_member_creates_k4():
    # saturation: each member is maximal among K4-free 4-vertex multigraphs
    for member in saturated_family_4()[:8]:
        for u in range(4):
            for v in range(u + 1, 4):
                free = (~member.mask(u, v)) & 0b11111
                if not free:
                    continue
                layer = free.bit_length()
                masks = {p: w for p, w in member.pairs()}
                masks[(u, v)] = member.mask(u, v) | (1 << (layer - 1))
                grown = MMultigraph.from_masks(4, 5, masks)
                w = contains_k4(grown)
                assert w is not None
                assert verify_k4_witness(grown, w)


def test_k4_witness_on_full_quad():
    full = MMultigraph.from_masks(4, 5, {(u, v): 0b11111 for u in range(4) for v in range(u + 1, 4)})
    w = contains_k4(full)
    assert w is not None
    assert verify_k4_witness(full, w)
    assert set(w.vertices) == {0, 1, 2, 3}


@given(st.integers(0, 10**9))
@settings(max_examples=40, deadline=None)
def test_k4_detection_monotone_under_deletion(seed):
    rng = random.Random(seed)
    mg = random_multigraph(5, 5, rng, keep=0.8)
    sub_masks = {}
    for pair, mask in mg.pairs():
        kept = mask & rng.getrandbits(5)
        if kept:
            sub_masks[pair] = kept
    sub = MMultigraph.from_masks(5, 5, sub_masks)
    if contains_k4(sub) is not None:
        assert contains_k4(mg) is not None


@given(st.integers(0, 10**9))
@settings(max_examples=30, deadline=None)
def test_witnesses_revalidate(seed):
    rng = random.Random(seed)
    mg = random_multigraph(6, 5, rng, keep=0.7)
    w = contains_k4(mg)
    if w is not None:
        assert verify_k4_witness(mg, w)
        assert len(set(w.vertices)) == 4


def test_triple_typing():
    mg = MMultigraph(3, 5, {(0, 1): [1, 2, 3], (0, 2): [1], (1, 2): [4, 5]})
    assert triple_type(mg, (0, 1, 2)) == (3, 2, 1)
    assert has_heavy_triple(mg) is None
    heavy = MMultigraph(4, 5, {(1, 2): [1, 2, 3], (1, 3): [2, 3, 4], (2, 3): [3, 4, 5]})
    assert has_heavy_triple(heavy) == (1, 2, 3)


def test_partitions_on_constructions():
    bc = bipartite_construction_5(6)
    nice = find_nice_partition(bc)
    good = find_good_partition(bc)
    assert nice is not None and nice.kind == "nice"
    assert good is not None and good.kind == "good"
    assert is_certificate_valid(bc, nice)
    assert is_certificate_valid(bc, good)
    assert set(nice.part1) == {0, 1, 2} and set(nice.part2) == {3, 4, 5}
    # all five layers live on every crossing pair of the 3-partite stack, so no
    # bipartition can silence three of them on one side
    tl = turan_layers_5(6)
    assert find_nice_partition(tl) is None
    assert find_good_partition(tl) is None


def test_certificate_tampering_detected():
    bc = bipartite_construction_5(6)
    cert = find_nice_partition(bc)
    swapped = type(cert)(cert.part2, cert.part1, cert.layer_roles, cert.kind)
    assert not is_certificate_valid(bc, swapped)
    bad_roles = type(cert)(cert.part1, cert.part2, (5, 4, 3, 2, 1), cert.kind)
    assert not is_certificate_valid(bc, bad_roles)


def test_nice_partition_size_bound_is_construction_size():
    for n in range(2, 20):
        assert nice_partition_size_bound(n) == bipartite_construction_5(n).size


@given(st.integers(0, 10**9))
@settings(max_examples=60, deadline=None)
def test_size_bound_holds_for_nicely_partitioned_subgraphs(seed):
    rng = random.Random(seed)
    n = rng.randrange(4, 8)
    bc = bipartite_construction_5(n)
    sub_masks = {}
    for pair, mask in bc.pairs():
        kept = mask & rng.getrandbits(5)
        if kept:
            sub_masks[pair] = kept
    sub = MMultigraph.from_masks(n, 5, sub_masks)
    assert sub.size <= nice_partition_size_bound(n)


def test_peeling_keeps_construction_when_degree_clears_threshold():
    beta = Fraction(10, 3)
    assert extract_dense_core(bipartite_construction_5(12), beta) == tuple(range(12))
    assert extract_dense_core(bipartite_construction_5(13), beta) == tuple(range(1, 13))
    # one notch tighter and the cascade clears everything
    assert extract_dense_core(bipartite_construction_5(12), Fraction(58, 17)) == ()
    assert extract_dense_core(bipartite_construction_5(10), beta) == ()


def test_peeling_rejects_out_of_range_beta():
    with pytest.raises(ValueError):
        extract_dense_core(bipartite_construction_5(4), 4)


@given(st.integers(0, 10**9))
@settings(max_examples=40, deadline=None)
def test_core_satisfies_its_own_degree_contract(seed):
    rng = random.Random(seed)
    mg = random_multigraph(rng.randrange(4, 9), 5, rng)
    beta = Fraction(rng.randrange(0, 8), rng.randrange(2, 5))
    if beta > Fraction(7, 2):
        beta = Fraction(7, 2)
    core = extract_dense_core(mg, beta)
    if core:
        inside = mg.induced(core)
        assert Fraction(inside.min_degree()) >= beta * len(core)
