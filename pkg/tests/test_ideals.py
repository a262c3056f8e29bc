import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from bcinverse import (
    RingMismatchError,
    Subset,
    build_ring,
    double_annihilators,
    is_direct_sum_of_ring,
    left_annihilator,
    left_ideal,
    right_annihilator,
    right_ideal,
    sandwich_set,
    subset_sum,
)

RINGS = {"zn:4": oracle.residue(4), "zn:6": oracle.residue(6), "zn:8": oracle.residue(8), "mat:2:zn:2": oracle.mat2(2)}


def as_set(R, values):
    return {R.index(v) for v in values}


@pytest.mark.parametrize("name", RINGS)
def test_ideals_match_oracle(name):
    R, ring = RINGS[name], build_ring(name)
    for a in R.elements:
        i = R.index(a)
        assert set(right_ideal(ring, i)) == as_set(R, oracle.right_ideal(R, a))
        assert set(left_ideal(ring, i)) == as_set(R, oracle.left_ideal(R, a))
        assert set(right_annihilator(ring, i)) == as_set(R, oracle.r_ann(R, a))
        assert set(left_annihilator(ring, i)) == as_set(R, oracle.l_ann(R, a))


def test_z6_examples():
    z6 = build_ring("zn:6")
    assert right_ideal(z6, 2).indices() == [0, 2, 4]
    assert right_annihilator(z6, 2).indices() == [0, 3]
    assert double_annihilators(z6, 2)[0].indices() == [0, 2, 4]
    assert right_ideal(z6, 0).indices() == [0]
    assert right_annihilator(z6, 0).is_whole
    assert is_direct_sum_of_ring(right_ideal(z6, 2), right_ideal(z6, 3))


def test_z4_double_annihilator():
    z4 = build_ring("zn:4")
    rl, lr = double_annihilators(z4, 2)
    assert rl.indices() == [0, 2] == lr.indices()
    assert not is_direct_sum_of_ring(right_ideal(z4, 2), right_ideal(z4, 2))


def test_rank_one_idempotent_in_m2z2():
    m2 = build_ring("mat:2:zn:2")
    a = m2.parse_literal("1,0,0,0")
    # first-row matrices and first-column matrices, 4 each
    assert right_ideal(m2, a).indices() == [0, 4, 8, 12]
    assert left_ideal(m2, a).indices() == [0, 2, 8, 10]
    assert right_annihilator(m2, a).cardinality == 4


def test_sandwich_set():
    z6 = build_ring("zn:6")
    assert sandwich_set(z6, 2, 3).indices() == [0]
    assert sandwich_set(z6, 2, 1).indices() == [0, 2, 4]


@given(st.sampled_from(sorted(RINGS)), st.data())
@settings(max_examples=60, deadline=None)
def test_annihilators_reverse_inclusion(name, data):
    ring = build_ring(name)
    members = st.lists(st.integers(0, ring.order - 1), max_size=5)
    s = Subset.of(ring, data.draw(members))
    t = s | Subset.of(ring, data.draw(members))
    assert s <= t
    assert right_annihilator(ring, t) <= right_annihilator(ring, s)
    assert left_annihilator(ring, t) <= left_annihilator(ring, s)


@pytest.mark.parametrize("name", RINGS)
def test_principal_ideals_are_closed(name):
    ring = build_ring(name)
    for a in range(ring.order):
        aR = right_ideal(ring, a)
        assert subset_sum(aR, aR) == aR
        for x, r in itertools.product(aR, range(ring.order)):
            assert ring.mul(x, r) in aR
        rl, lr = double_annihilators(ring, a)
        assert aR <= rl and left_ideal(ring, a) <= lr


def test_subset_equality_and_hashing():
    z6 = build_ring("zn:6")
    s = Subset.of(z6, [0, 2, 4])
    assert s == right_ideal(z6, 4)
    assert hash(s) == hash(right_ideal(z6, 4))
    assert len({s, right_ideal(z6, 2), right_ideal(z6, 3)}) == 2
    assert Subset.zero(z6).is_zero and not s.is_zero
    assert 2 in s and 3 not in s
    assert (s & Subset.of(z6, [0, 3])).is_zero


def test_mixing_rings_is_rejected():
    with pytest.raises(RingMismatchError):
        right_ideal(build_ring("zn:6"), 2) & right_ideal(build_ring("zn:4"), 2)
    with pytest.raises(ValueError):
        Subset(build_ring("zn:6"), [True] * 5)
