import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcinverse import BudgetExceeded, EngineInconsistency, PreconditionError, build_ring
from bcinverse.harness import (
    CHECK_ORDER,
    CHECKS,
    CachedContext,
    Context,
    HarnessConfig,
    dumps_record,
    replay,
    run_all,
    run_check,
    summary_table,
)
from bcinverse.harness.checks import Check, existence_clauses


@pytest.fixture(scope="module")
def z6():
    return build_ring("zn:6")


@pytest.fixture(scope="module")
def m2_ctx():
    return CachedContext(build_ring("mat:2:zn:2"))


@pytest.mark.parametrize("spec", ["zn:2", "zn:3", "zn:4", "zn:6", "prod:zn:2,zn:2"])
def test_run_all_passes(spec):
    reports = run_all(build_ring(spec))
    assert [r.theorem_id for r in reports] == list(CHECK_ORDER)
    for r in reports:
        assert r.passed, r.to_record()
        assert r.passes + r.failures == r.instances
        for b in r.branches:
            assert b.passes + b.failures == b.instances


def test_existence_report_counts(z6):
    assert run_check(build_ring("zn:2"), "thm-3.4-equiv").instances == 8
    r = run_check(z6, "thm-3.4-equiv")
    assert (r.instances, r.vacuous) == (216, 0)
    assert r.branch("t-regular").instances == 216


def test_coincidence_covers_all_quadruples_of_z6(z6):
    r = run_check(z6, "thm-coincidence")
    assert r.instances == 6**4 and r.passed


def test_regularity_transfer_vacuous_for_non_regular_a():
    z4 = build_ring("zn:4")
    ctx = CachedContext(z4)
    out = CHECKS["lem-3.1-3.2-outer"].evaluate(ctx, (2, 2), HarnessConfig())
    assert out["regular-transfer"] is None
    out = CHECKS["lem-3.1-3.2-outer"].evaluate(ctx, (2, 0), HarnessConfig())
    assert out["double-annihilator"] is None and out["containment"] == []
    assert out["outer-inverse"] == []


def test_z4_transfer_instance_all_false():
    ctx = CachedContext(build_ring("zn:4"))
    assert CHECKS["thm-transfer"].evaluate(ctx, (1, 1, 1, 2), HarnessConfig()) == {"e-form": [], "f-form": []}
    assert ctx.bc(2, 1, 1) is None
    assert not ctx.is_unit(ctx.plus_one_minus(ctx.prod(1, 2, 1), 1))


def test_z6_pair_identities_instance():
    ctx = CachedContext(build_ring("zn:6"))
    assert (ctx.bc(2, 4, 4), ctx.bc(4, 4, 4)) == (2, 4)
    assert CHECKS["lem-4.1-identities"].evaluate(ctx, (2, 4, 4, 4), HarnessConfig()) == {"identities": []}


def test_existence_clauses_z6_example():
    v = existence_clauses(CachedContext(build_ring("zn:6")), 2, 4, 4)
    assert v == {"i": True, "ii": True, "iii": True, "iv": True, "v": True}
    v = existence_clauses(Context(build_ring("zn:4")), 1, 2, 2)
    assert not v["i"] and not v["ii"]


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_cached_context_agrees_with_engine(m2_ctx, data):
    direct = Context(m2_ctx.ring)
    a, b, c = (data.draw(st.integers(0, 15)) for _ in range(3))
    for kind in ("bc", "lemma", "hybrid", "annihilator"):
        assert m2_ctx.acceptors(kind, a, b, c) == direct.acceptors(kind, a, b, c)
    assert m2_ctx.bc_ideal_test(a, b, c) == direct.bc_ideal_test(a, b, c)
    assert m2_ctx.inner(a) == direct.inner(a)
    assert m2_ctx.rl(a) == direct.rl(a) and m2_ctx.lr(a) == direct.lr(a)
    assert m2_ctx.unit_inv(a) == direct.unit_inv(a)
    assert m2_ctx.moore_penrose(a) == direct.moore_penrose(a)


@pytest.mark.parametrize("check_id", ["thm-3.4-equiv", "thm-transfer", "specializations", "lem-3.1-3.2-outer"])
def test_direct_context_gives_same_report(check_id):
    ring = build_ring("zn:6")
    fast = run_check(ring, check_id)
    slow = run_check(ring, check_id, ctx=Context(ring))
    assert fast.to_record() == slow.to_record()


def test_reports_independent_of_threads(z6):
    one = [r.to_record() for r in run_all(z6, HarnessConfig(threads=1))]
    many = [r.to_record() for r in run_all(z6, HarnessConfig(threads=4))]
    assert one == many


def test_inner_choice_cap_reduces_work():
    ring = build_ring("mat:2:zn:2")
    full = run_check(ring, "lem-4.1-identities")
    capped = run_check(ring, "lem-4.1-identities", HarnessConfig(max_inner_choices=1))
    assert full.passed and capped.passed and full.instances == capped.instances


def test_budget(z6):
    with pytest.raises(BudgetExceeded):
        run_all(z6, HarnessConfig(max_order=5))
    with pytest.raises(PreconditionError):
        HarnessConfig(threads=0)


@pytest.fixture
def false_claim():
    """A deliberately wrong property: every element is claimed to be a unit."""

    def evaluate(ctx, inst, cfg):
        (a,) = inst
        return {"claim": [] if ctx.is_unit(a) else ["unit"]}

    CHECKS["test-false-claim"] = Check(
        "test-false-claim", ("a",), ("claim",), lambda ctx, cfg: ((a,) for a in ctx.elements), evaluate, "false"
    )
    yield "test-false-claim"
    del CHECKS["test-false-claim"]


def test_failures_are_reported_and_replay(z6, false_claim):
    r = run_check(z6, false_claim)
    assert not r.passed
    assert (r.passes, r.failures) == (2, 4)
    cx = r.first_counterexample
    assert cx == {"theorem": false_claim, "branch": "claim", "inputs": {"a": 0}, "failed": ["unit"]}
    assert r.notes
    assert replay(z6, cx)
    assert not replay(z6, {**cx, "inputs": {"a": 5}})
    assert "first counterexample" in summary_table([r])


def test_engine_exceptions_become_failures(z6, false_claim):
    def boom(ctx, inst, cfg):
        raise EngineInconsistency("two values")

    CHECKS[false_claim] = Check(false_claim, ("a",), ("claim",), lambda ctx, cfg: [(0,)], boom, "boom")
    r = run_check(z6, false_claim)
    assert r.failures == 1 and r.branch("engine").first_counterexample["failed"] == ["EngineInconsistency: two values"]


def test_record_serialisation_is_stable(z6):
    rec = run_check(z6, "bc-routes").to_record()
    assert rec["schema_version"] == 1 and rec["status"] == "pass"
    assert "wall_time" not in dumps_record(rec)
    assert dumps_record(rec) == dumps_record(dict(reversed(list(rec.items()))))


def test_every_check_has_distinct_branches():
    for chk in CHECKS.values():
        assert len(set(chk.branches)) == len(chk.branches)
        assert len(chk.inputs) == len(set(chk.inputs))


def test_instance_order_is_canonical(z6):
    ctx = CachedContext(z6)
    insts = list(CHECKS["bc-routes"].instances(ctx, HarnessConfig()))
    assert insts == list(itertools.product(range(6), repeat=3))
