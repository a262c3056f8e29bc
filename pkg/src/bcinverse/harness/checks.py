"""Executable theorem properties and the sweep runner.

Each check enumerates instance tuples in a fixed canonical order and maps
every instance to ``{branch: failures}``, where ``failures`` is ``None`` for
a vacuous instance (hypothesis not met), ``[]`` for a pass, or the list of
failed clause labels.  Branches separate hypotheses so that a failure points
at the hypothesis under which it happened.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from ..errors import BCInverseError, BudgetExceeded, PreconditionError
from ..rings import RingHandle
from .context import CachedContext, Context
from .report import FINITE_RING_NOTE, BranchReport, PropertyReport

Outcome = dict[str, "list[str] | None"]


@dataclass
class HarnessConfig:
    threads: int = 1
    # cap on inner-inverse choices per element (None = all of them)
    max_inner_choices: int | None = None
    max_order: int = 32

    def __post_init__(self):
        if self.threads < 1:
            raise PreconditionError(f"threads must be >= 1, got {self.threads}")
        if self.max_inner_choices is not None and self.max_inner_choices < 1:
            raise PreconditionError("max_inner_choices must be >= 1")


@dataclass(frozen=True)
class Check:
    id: str
    inputs: tuple[str, ...]
    branches: tuple[str, ...]
    instances: Callable[[Context, HarnessConfig], Iterable[tuple]]
    evaluate: Callable[[Context, tuple, HarnessConfig], Outcome]
    title: str


CHECKS: dict[str, Check] = {}


def _register(id, inputs, branches, instances, title):
    def deco(fn):
        CHECKS[id] = Check(id, tuple(inputs), tuple(branches), instances, fn, title)
        return fn

    return deco


def _equiv(values: dict[str, bool], ref: str = "i") -> list[str]:
    return [f"({k})!=({ref})" for k, v in values.items() if k != ref and v != values[ref]]


def _choices(xs: list[int], cfg: HarnessConfig) -> list[int]:
    return xs if cfg.max_inner_choices is None else xs[: cfg.max_inner_choices]


# -- instance families -------------------------------------------------------


def _triples(ctx, cfg):
    return itertools.product(ctx.elements, repeat=3)


def _pairs(ctx, cfg):
    return itertools.product(ctx.elements, repeat=2)


def _quads(ctx, cfg):
    return itertools.product(ctx.elements, repeat=4)


def _singles(ctx, cfg):
    return ((a,) for a in ctx.elements)


def _element_idempotent(ctx, cfg):
    return ((a, e) for a in ctx.elements for e in ctx.idempotents)


def _element_two_idempotents(ctx, cfg):
    return ((a, e, f) for a in ctx.elements for e in ctx.idempotents for f in ctx.idempotents)


def _invertible(ctx) -> dict[tuple[int, int], list[int]]:
    if isinstance(ctx, CachedContext):
        return ctx.invertible_triples()
    return {
        (b, c): [a for a in ctx.elements if ctx.bc(a, b, c) is not None]
        for b in ctx.elements
        for c in ctx.elements
    }


def _transfer_instances(ctx, cfg):
    inv = _invertible(ctx)
    for b, c in itertools.product(ctx.elements, repeat=2):
        for a in inv[(b, c)]:
            for d in ctx.elements:
                yield (a, b, c, d)


def _pair_instances(ctx, cfg):
    """(a, d, b, c) with both (b,c)-inverses present; filtered by (b, c) first."""
    inv = _invertible(ctx)
    for b, c in itertools.product(ctx.elements, repeat=2):
        found = inv[(b, c)]
        for a in found:
            for d in found:
                yield (a, d, b, c)


def _image_kernel_instances(ctx, cfg):
    E = ctx.idempotents
    for p in E:
        for q in E:
            for a in ctx.elements:
                if ctx.image_kernel(a, p, q) is None:
                    continue
                for d in ctx.elements:
                    yield (p, q, a, d)


# -- checks ----------------------------------------------------------------


@_register("bc-routes", "abc", ["routes"], _triples, "uniqueness and route agreement of the (b,c)-inverse")
def check_routes(ctx, inst, cfg):
    a, b, c = inst
    acc = ctx.acceptors("bc", a, b, c)
    fails = []
    if len(acc) > 1:
        fails.append("uniqueness")
    if ctx.acceptors("lemma", a, b, c) != acc:
        fails.append("ideal-characterisation-route")
    if ctx.bc_ideal_test(a, b, c) != bool(acc):
        fails.append("existence-test-route")
    return {"routes": fails}


@_register("prop-3.3-regular", "abc", ["invertible"], _triples, "b, c and cab regular when a^(b,c) exists")
def check_regularity(ctx, inst, cfg):
    a, b, c = inst
    if ctx.bc(a, b, c) is None:
        return {"invertible": None}
    fails = [name for name, x in (("b", b), ("c", c), ("t", ctx.prod(c, a, b))) if not ctx.is_regular(x)]
    return {"invertible": [f"{n}-regular" for n in fails]}


@_register(
    "lem-3.1-3.2-outer",
    "ay",
    ["outer-inverse", "regular-transfer", "containment", "double-annihilator"],
    _pairs,
    "annihilator facts for outer inverses; regularity transfer; rl(a)=aR",
)
def check_outer_lemmas(ctx, inst, cfg):
    a, y = inst
    out: Outcome = {}
    if ctx.prod(y, a, y) == y:
        f = []
        if not (ctx.r_ann(a) & ctx.right_ideal(y)).is_zero:
            f.append("(i)")
        if not (ctx.l_ann(a) & ctx.left_ideal(y)).is_zero:
            f.append("(ii)")
        if ctx.left_ideal(ctx.mul(a, y)) != ctx.left_ideal(y):
            f.append("(iii)")
        if ctx.right_ideal(ctx.mul(y, a)) != ctx.right_ideal(y):
            f.append("(iv)")
        out["outer-inverse"] = f
    else:
        out["outer-inverse"] = None
    # second slot doubles as b for the regularity-transfer clause
    if ctx.is_regular(a) and ctx.left_ideal(a) == ctx.left_ideal(y):
        out["regular-transfer"] = [] if ctx.is_regular(y) else ["b-regular"]
    else:
        out["regular-transfer"] = None
    if y == ctx.zero:
        f = []
        if not ctx.right_ideal(a) <= ctx.rl(a):
            f.append("aR<=rl(a)")
        if not ctx.left_ideal(a) <= ctx.lr(a):
            f.append("Ra<=lr(a)")
        out["containment"] = f
        if ctx.is_regular(a):
            f = []
            if ctx.rl(a) != ctx.right_ideal(a):
                f.append("rl(a)=aR")
            if ctx.lr(a) != ctx.left_ideal(a):
                f.append("lr(a)=Ra")
            out["double-annihilator"] = f
        else:
            out["double-annihilator"] = None
    return out


def existence_clauses(ctx: Context, a: int, b: int, c: int) -> dict[str, bool]:
    """Truth values of the five existence conditions for a^(b,c)."""
    t = ctx.prod(c, a, b)
    rt, rb, lt, lc = ctx.r_ann(t), ctx.r_ann(b), ctx.l_ann(t), ctx.l_ann(c)
    return {
        "i": ctx.bc(a, b, c) is not None,
        "ii": (ctx.r_ann(a) & ctx.right_ideal(b)).is_zero
        and ctx.direct_sum(ctx.right_ideal(ctx.mul(a, b)), ctx.r_ann(c)),
        "iii": rt == rb and ctx.right_ideal(t) == ctx.right_ideal(c),
        "iv": lt == lc and ctx.left_ideal(t) == ctx.left_ideal(b),
        "v": lt == lc and rt == rb,
    }


@_register(
    "thm-3.4-equiv",
    "abc",
    ["t-regular", "b-c-regular", "unconditional"],
    _triples,
    "existence equivalences under t regular / b, c regular",
)
def check_existence(ctx, inst, cfg):
    a, b, c = inst
    v = existence_clauses(ctx, a, b, c)
    t = ctx.prod(c, a, b)
    out: Outcome = {}
    out["t-regular"] = _equiv(v) if ctx.is_regular(t) else None
    if ctx.is_regular(b) and ctx.is_regular(c):
        out["b-c-regular"] = _equiv({k: v[k] for k in ("i", "ii", "iii", "iv")})
    else:
        out["b-c-regular"] = None
    f = []
    for lhs, rhs in (("i", "ii"), ("ii", "iii"), ("iv", "v")):
        if v[lhs] and not v[rhs]:
            f.append(f"({lhs})=>({rhs})")
    out["unconditional"] = f
    return out


@_register(
    "thm-coincidence",
    "abcy",
    ["t-regular", "b-c-regular"],
    _quads,
    "(b,c), hybrid and annihilator inverses accept the same y",
)
def check_coincidence(ctx, inst, cfg):
    a, b, c, y = inst
    t_reg = ctx.is_regular(ctx.prod(c, a, b))
    bc_reg = ctx.is_regular(b) and ctx.is_regular(c)
    if not (t_reg or bc_reg):
        return {"t-regular": None, "b-c-regular": None}
    v = {k: y in ctx.acceptors(k, a, b, c) for k in ("bc", "hybrid", "annihilator")}
    f = _equiv(v, "bc")
    return {"t-regular": f if t_reg else None, "b-c-regular": list(f) if bc_reg else None}


@_register(
    "lem-3.13-idempotent-unit",
    "ae",
    ["equivalence"],
    _element_idempotent,
    "e in eaeR ∩ Reae iff eae+1-e is a unit iff ae+1-e is a unit",
)
def check_idempotent_unit(ctx, inst, cfg):
    a, e = inst
    eae = ctx.prod(e, a, e)
    v = {
        "i": e in ctx.right_ideal(eae) and e in ctx.left_ideal(eae),
        "ii": ctx.is_unit(ctx.plus_one_minus(eae, e)),
        "ii'": ctx.is_unit(ctx.plus_one_minus(ctx.mul(a, e), e)),
    }
    return {"equivalence": _equiv(v)}


@_register(
    "thm-transfer",
    "abcd",
    ["e-form", "f-form"],
    _transfer_instances,
    "transfer of a^(b,c) to d: equivalences, formulas and inverse identities",
)
def check_transfer(ctx, inst, cfg):
    a, b, c, d = inst
    y = ctx.bc(a, b, c)
    if y is None:
        return {"e-form": None, "f-form": None}
    z = ctx.bc(d, b, c)
    has = z is not None
    one = ctx.one
    e_fail, f_fail = [], []
    for bi in _choices(ctx.inner(b), cfg):
        e = ctx.mul(b, bi)
        w = ctx.prod(e, y, d, e)
        x = ctx.plus_one_minus(ctx.prod(y, d, e), e)
        xinv = ctx.unit_inv(x)
        tag = f"[b_inner={bi}]"
        v = {"i": has, "ii": e in ctx.right_ideal(w) and e in ctx.left_ideal(w), "iii": xinv is not None}
        e_fail += [s + tag for s in _equiv(v)]
        if has and xinv is not None:
            if ctx.mul(xinv, y) != z:
                e_fail.append("formula" + tag)
            rem = ctx.plus_one_minus(ctx.prod(z, a, e), e)
            if ctx.mul(x, rem) != one or ctx.mul(rem, x) != one:
                e_fail.append("inverse-identity" + tag)
    for ci in _choices(ctx.inner(c), cfg):
        f = ctx.mul(ci, c)
        w = ctx.prod(f, d, y, f)
        x = ctx.plus_one_minus(ctx.prod(f, d, y), f)
        xinv = ctx.unit_inv(x)
        tag = f"[c_inner={ci}]"
        v = {"i": has, "ii": f in ctx.right_ideal(w) and f in ctx.left_ideal(w), "iii": xinv is not None}
        f_fail += [s + tag for s in _equiv(v)]
        if has and xinv is not None:
            if ctx.mul(y, xinv) != z:
                f_fail.append("formula" + tag)
            rem = ctx.plus_one_minus(ctx.prod(f, a, z), f)
            if ctx.mul(x, rem) != one or ctx.mul(rem, x) != one:
                f_fail.append("inverse-identity" + tag)
    return {"e-form": e_fail, "f-form": f_fail}


@_register(
    "cor-image-kernel",
    "pqad",
    ["equivalence"],
    _image_kernel_instances,
    "d has an image-kernel (p,q)-inverse iff 1-p+a^x dp iff q+(1-q)da^x is a unit",
)
def check_image_kernel(ctx, inst, cfg):
    p, q, a, d = inst
    x = ctx.image_kernel(a, p, q)
    if x is None:
        return {"equivalence": None}
    v = {
        "i": ctx.image_kernel(d, p, q) is not None,
        "ii": ctx.is_unit(ctx.plus_one_minus(ctx.prod(x, d, p), p)),
        "iii": ctx.is_unit(ctx.add(q, ctx.prod(ctx.sub(ctx.one, q), d, x))),
    }
    return {"equivalence": _equiv(v)}


@_register(
    "bott-duffin",
    "aef",
    ["agreement", "equal-idempotents"],
    _element_two_idempotents,
    "Bott-Duffin vs (e,f)-inverse vs image-kernel (e,1-f)-inverse; e=f closed formula",
)
def check_bott_duffin(ctx, inst, cfg):
    a, e, f = inst
    y = ctx.bott_duffin(a, e, f)
    fails = []
    if y != ctx.bc(a, e, f):
        fails.append("bc-inverse")
    if y != ctx.image_kernel(a, e, ctx.sub(ctx.one, f)):
        fails.append("image-kernel-inverse")
    out: Outcome = {"agreement": fails}
    if e == f:
        u = ctx.unit_inv(ctx.plus_one_minus(ctx.mul(a, e), e))
        formula = None if u is None else ctx.mul(e, u)
        out["equal-idempotents"] = [] if formula == y else ["closed-formula"]
    else:
        out["equal-idempotents"] = None
    return out


@_register(
    "specializations",
    "a",
    ["group", "drazin", "moore-penrose"],
    _singles,
    "group, Drazin and Moore-Penrose inverses as (b,c)-inverses",
)
def check_specializations(ctx, inst, cfg):
    (a,) = inst
    out: Outcome = {}
    out["group"] = [] if ctx.group(a) == ctx.bc(a, a, a) else ["group=(a,a)-inverse"]
    dz, j = ctx.drazin(a)
    aj = ctx.prod(*([a] * j))
    out["drazin"] = [] if ctx.bc(a, aj, aj) == dz else [f"drazin=(a^{j},a^{j})-inverse"]
    at = ctx.transpose(a)
    x = ctx.bc(a, at, at)
    mps = ctx.moore_penrose(a)
    f = []
    if x is not None:
        ax, xa = ctx.mul(a, x), ctx.mul(x, a)
        if not (
            ctx.mul(ax, a) == a
            and ctx.mul(xa, x) == x
            and ctx.transpose(ax) == ax
            and ctx.transpose(xa) == xa
        ):
            f.append("penrose-equations")
    if (x is not None) != bool(mps):
        f.append("existence")
    elif x is not None and mps != [x]:
        f.append("value")
    out["moore-penrose"] = f
    return out


def _pair_inverses(ctx, a, d, b, c):
    return ctx.bc(a, b, c), ctx.bc(d, b, c)


@_register(
    "lem-4.1-identities",
    "adbc",
    ["identities"],
    _pair_instances,
    "identities linking a^(b,c) and d^(b,c) for every inner-inverse choice",
)
def check_pair_identities(ctx, inst, cfg):
    a, d, b, c = inst
    y, z = _pair_inverses(ctx, a, d, b, c)
    if y is None or z is None:
        return {"identities": None}
    p = ctx.prod
    f = []
    if not (z == p(z, a, y) == p(y, a, z)):
        f.append("(i)")
    if not (y == p(y, d, z) == p(z, d, y)):
        f.append("(ii)")
    for bi in _choices(ctx.inner(b), cfg):
        e = ctx.mul(b, bi)
        if not (e == p(e, z, a, y, d, e) == p(e, y, a, e) == p(e, z, d, e)):
            f.append(f"(iii)[b_inner={bi}]")
    for ci in _choices(ctx.inner(c), cfg):
        g = ctx.mul(ci, c)
        if not (g == p(g, d, y, a, z, g) == p(g, d, z, g) == p(g, a, y, g)):
            f.append(f"(iv)[c_inner={ci}]")
    return {"identities": f}


def _is_group_inverse_of(ctx, x, g):
    return ctx.group(x) == g


@_register(
    "thm-equal-idempotents",
    "adbc",
    ["a.ya=d.zd", "ya.a=zd.d", "ya.a=d.zd"],
    _pair_instances,
    "equal (b,c)-idempotents: right, left and mixed forms",
)
def check_equal_idempotents(ctx, inst, cfg):
    a, d, b, c = inst
    y, z = _pair_inverses(ctx, a, d, b, c)
    names = ("a.ya=d.zd", "ya.a=zd.d", "ya.a=d.zd")
    if y is None or z is None:
        return {n: None for n in names}
    p, m = ctx.prod, ctx.mul
    right = {
        "i": m(a, y) == m(d, z),
        "ii": p(a, y, d, z) == p(d, z, a, y),
        "iii": p(a, z, d, y) == p(d, y, a, z),
        "iv": _is_group_inverse_of(ctx, m(a, z), m(d, y)),
        "v": _is_group_inverse_of(ctx, m(d, y), m(a, z)),
    }
    left = {
        "i": m(y, a) == m(z, d),
        "ii": p(z, d, y, a) == p(y, a, z, d),
        "iii": p(y, d, z, a) == p(z, a, y, d),
        "iv": _is_group_inverse_of(ctx, m(y, d), m(z, a)),
        "v": _is_group_inverse_of(ctx, m(z, a), m(y, d)),
    }
    mixed = {
        "i": m(y, a) == m(d, z),
        "ii": p(y, d, z, a) == p(d, z, a, y),
        "iii": p(z, d, y, a) == p(d, y, a, z),
        "iv": y == p(d, z, y) and z == p(z, y, a),
        "v": p(y, a, z) == p(z, y, a) and p(y, d, z) == p(d, z, y),
    }
    mixed_fail = _equiv(mixed)
    if mixed["i"] and ctx.bc(m(a, d), b, c) != m(z, y):
        mixed_fail.append("reverse-order-consequence")
    return {names[0]: _equiv(right), names[1]: _equiv(left), names[2]: mixed_fail}


@_register(
    "thm-4.4-reverse-order",
    "adbc",
    ["equivalence"],
    _pair_instances,
    "(ad)^(b,c) = d^(b,c) a^(b,c) and its two characterisations",
)
def check_reverse_order(ctx, inst, cfg):
    a, d, b, c = inst
    y, z = _pair_inverses(ctx, a, d, b, c)
    if y is None or z is None:
        return {"equivalence": None}
    p = ctx.prod
    w = ctx.bc(ctx.mul(a, d), b, c)
    v = {
        "i": w is not None and w == ctx.mul(z, y),
        "ii": z == p(z, a, d, z, y) and z == p(z, y, a, d, z),
        "iii": y == p(y, a, d, z, y) and y == p(z, y, a, d, y),
    }
    return {"equivalence": _equiv(v)}


CHECK_ORDER = tuple(CHECKS)


# -- runner ----------------------------------------------------------------


def _safe_evaluate(chk: Check, ctx: Context, inst: tuple, cfg: HarnessConfig) -> Outcome:
    try:
        return chk.evaluate(ctx, inst, cfg)
    except BCInverseError as exc:
        return {"engine": [f"{type(exc).__name__}: {exc}"]}


def _evaluate_all(chk, ctx, insts, cfg) -> list[Outcome]:
    if cfg.threads <= 1 or len(insts) < 2 * cfg.threads:
        return [_safe_evaluate(chk, ctx, inst, cfg) for inst in insts]
    size = -(-len(insts) // (cfg.threads * 4))
    chunks = [insts[i : i + size] for i in range(0, len(insts), size)]

    def work(chunk):
        return [_safe_evaluate(chk, ctx, inst, cfg) for inst in chunk]

    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        # map preserves submission order, so merging stays canonical
        return [o for part in pool.map(work, chunks) for o in part]


def make_context(ring: RingHandle, cfg: HarnessConfig | None = None) -> CachedContext:
    cfg = cfg or HarnessConfig()
    if ring.order > cfg.max_order:
        raise BudgetExceeded(f"ring order {ring.order} exceeds harness budget max_order={cfg.max_order}")
    return CachedContext(ring)


def run_check(
    ring: RingHandle,
    check_id: str,
    config: HarnessConfig | None = None,
    ctx: CachedContext | None = None,
) -> PropertyReport:
    cfg = config or HarnessConfig()
    chk = CHECKS[check_id]
    ctx = ctx or make_context(ring, cfg)
    start = time.perf_counter()
    insts = list(chk.instances(ctx, cfg))
    outcomes = _evaluate_all(chk, ctx, insts, cfg)
    branches = {name: BranchReport(name) for name in chk.branches}
    totals = {"pass": 0, "fail": 0, "vacuous": 0}
    for inst, outcome in zip(insts, outcomes):
        verdicts = outcome.values()
        if any(verdicts):
            totals["fail"] += 1
        elif all(v is None for v in verdicts):
            totals["vacuous"] += 1
        else:
            totals["pass"] += 1
        for name, fails in outcome.items():
            br = branches.setdefault(name, BranchReport(name))
            if fails is None:
                br.vacuous += 1
            elif fails:
                br.failures += 1
                if br.first_counterexample is None:
                    br.first_counterexample = {
                        "theorem": chk.id,
                        "branch": name,
                        "inputs": dict(zip(chk.inputs, inst)),
                        "failed": list(fails),
                    }
            else:
                br.passes += 1
    report = PropertyReport(
        theorem_id=chk.id,
        ring=str(ring.spec),
        branches=list(branches.values()),
        passes=totals["pass"],
        failures=totals["fail"],
        vacuous=totals["vacuous"],
        wall_time=time.perf_counter() - start,
    )
    if report.failures:
        report.notes.append(FINITE_RING_NOTE)
    return report


def run_all(ring: RingHandle, config: HarnessConfig | None = None, checks: Iterable[str] | None = None) -> list[PropertyReport]:
    cfg = config or HarnessConfig()
    ctx = make_context(ring, cfg)
    ids = list(checks) if checks is not None else list(CHECK_ORDER)
    return [run_check(ring, cid, cfg, ctx) for cid in ids]


def replay(ring: RingHandle, counterexample: dict, config: HarnessConfig | None = None) -> bool:
    """Re-evaluate a recorded failure through the uncached engine.

    Returns True when the same clauses fail again.
    """
    cfg = config or HarnessConfig()
    chk = CHECKS[counterexample["theorem"]]
    inst = tuple(counterexample["inputs"][k] for k in chk.inputs)
    outcome = _safe_evaluate(chk, Context(ring), inst, cfg)
    return outcome.get(counterexample["branch"]) == counterexample["failed"]
