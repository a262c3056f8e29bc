import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from bcinverse import (
    EngineInconsistency,
    PreconditionError,
    annihilator_bc_inverse,
    bc_exists_via_ideals,
    bc_idempotents,
    bc_inverse,
    bc_inverse_via_lemma,
    bott_duffin,
    build_ring,
    drazin_inverse,
    group_inverse,
    hybrid_bc_inverse,
    image_kernel_inverse,
    inner_inverses,
    is_moore_penrose,
    is_regular,
    transfer_d_inverse,
    transfer_d_inverse_dual,
    verify_witnesses,
)
from bcinverse.inverses import bc_acceptors

ORACLE_RINGS = {f"zn:{n}": oracle.residue(n) for n in range(2, 9)}
ORACLE_RINGS["mat:2:zn:2"] = oracle.mat2(2)

# number of (a,b,c) with a (b,c)-inverse, counted by the brute-force oracle
INVERTIBLE_TRIPLES = {"zn:2": 3, "zn:4": 12, "zn:6": 33, "zn:8": 72, "mat:2:zn:2": 880}


@pytest.fixture(scope="module")
def z6():
    return build_ring("zn:6")


@pytest.fixture(scope="module")
def z4():
    return build_ring("zn:4")


def test_bc_examples(z6, z4):
    r = bc_inverse(z6, 2, 4, 4)
    assert r.found and r.index == 2
    assert verify_witnesses(z6, r)
    assert not bc_inverse(z4, 1, 2, 2).found
    assert not bc_exists_via_ideals(z4, 1, 2, 2)
    assert bc_inverse_via_lemma(z6, 2, 4, 4).index == 2


def test_relatives_examples(z6):
    assert hybrid_bc_inverse(z6, 2, 4, 4).index == 2
    assert annihilator_bc_inverse(z6, 2, 4, 4).index == 2


def test_inner_group_drazin_examples(z6, z4):
    assert inner_inverses(z6, 4).indices() == [1, 4]
    assert group_inverse(z6, 2).index == 2
    assert group_inverse(z6, 1).index == 1
    assert not group_inverse(z4, 2).found
    d = drazin_inverse(z4, 2)
    assert (d.index, d.drazin_index) == (0, 2)
    d = drazin_inverse(z6, 2)
    assert (d.index, d.drazin_index) == (2, 1)


def test_bott_duffin_and_image_kernel_examples(z6, z4):
    r = bott_duffin(z6, 2, 4, 4)
    assert r.index == 2 and r.witnesses["ae+1-e"] == 5
    assert not bott_duffin(z4, 2, 1, 1).found
    assert image_kernel_inverse(z6, 2, 4, 3).index == 2
    assert not image_kernel_inverse(z4, 2, 1, 0).found
    with pytest.raises(PreconditionError):
        bott_duffin(z6, 2, 2, 4)
    with pytest.raises(PreconditionError):
        image_kernel_inverse(z6, 2, 5, 0)


def test_transfer_examples(z6, z4):
    r = transfer_d_inverse(z6, 2, 4, 4, 4, 1)
    assert r.index == 4 and r.witnesses["x"] == 5
    assert transfer_d_inverse_dual(z6, 2, 4, 4, 4, 1).index == 4
    assert not transfer_d_inverse(z4, 1, 2, 1, 1, 1).found
    with pytest.raises(PreconditionError):
        transfer_d_inverse(z4, 1, 2, 2, 2, 1)  # a has no (2,2)-inverse
    with pytest.raises(PreconditionError):
        transfer_d_inverse(z6, 2, 4, 4, 4, 2)  # 2 is not an inner inverse of 4


@pytest.mark.parametrize("name", sorted(ORACLE_RINGS))
def test_bc_inverse_matches_oracle(name):
    R, ring = ORACLE_RINGS[name], build_ring(name)
    found = 0
    for a, b, c in itertools.product(R.elements, repeat=3):
        want = [R.index(y) for y in oracle.bc_inverses(R, a, b, c)]
        got = bc_acceptors(ring, R.index(a), R.index(b), R.index(c))
        assert got == want
        found += bool(want)
    if name in INVERTIBLE_TRIPLES:
        assert found == INVERTIBLE_TRIPLES[name]


@pytest.mark.parametrize("name", sorted(ORACLE_RINGS))
def test_group_drazin_inner_match_oracle(name):
    R, ring = ORACLE_RINGS[name], build_ring(name)
    for a in R.elements:
        i = R.index(a)
        assert inner_inverses(ring, i).indices() == sorted(R.index(x) for x in oracle.inner(R, a))
        g = oracle.group_inverses(R, a)
        assert group_inverse(ring, i).index == (R.index(g[0]) if g else None)
        x, j = oracle.drazin(R, a)
        d = drazin_inverse(ring, i)
        assert (d.index, d.drazin_index) == (R.index(x), j)


@given(st.sampled_from(["zn:9", "zn:12", "mat:2:zn:2", "prod:zn:2,zn:4"]), st.data())
@settings(max_examples=80, deadline=None)
def test_found_inverse_satisfies_definition(name, data):
    ring = build_ring(name)
    idx = st.integers(0, ring.order - 1)
    a, b, c = data.draw(idx), data.draw(idx), data.draw(idx)
    r = bc_inverse(ring, a, b, c)
    assert r.found == bc_exists_via_ideals(ring, a, b, c)
    assert r.index == bc_inverse_via_lemma(ring, a, b, c).index
    if r.found:
        y = r.index
        assert verify_witnesses(ring, r)
        assert ring.prod(y, a, y) == y
        ya, ay = bc_idempotents(ring, a, y)
        assert ring.is_idempotent(ya) and ring.is_idempotent(ay)


@given(st.integers(0, 15))
def test_moore_penrose_on_m2z2(a):
    ring = build_ring("mat:2:zn:2")
    t = ring.transpose(a)
    r = bc_inverse(ring, a, t, t)
    mp = [x for x in range(16) if is_moore_penrose(ring, a, x)]
    assert mp == ([r.index] if r.found else [])


def test_regularity(z4, z6):
    assert [is_regular(z4, x) for x in range(4)] == [True, True, False, True]
    assert all(is_regular(z6, x) for x in range(6))


def test_element_objects_are_accepted(z6):
    r = bc_inverse(z6, z6.element(2), z6.element(4), z6.element(4))
    assert r.index == 2 and r.to_record()["value"] == 2


def test_not_outer_inverse_rejected(z6):
    with pytest.raises(PreconditionError):
        bc_idempotents(z6, 2, 1)


def test_engine_detects_a_broken_formula(z6, monkeypatch):
    # every "inverse" is now 1, so the formula gives y instead of d's inverse
    monkeypatch.setattr(type(z6), "unit_inverse", lambda self, x: self.one)
    with pytest.raises(EngineInconsistency):
        transfer_d_inverse(z6, 2, 4, 4, 4, 1)
