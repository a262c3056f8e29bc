"""Search finite ring families for triples separating two conditions.

A target pairs a hypothesis with a witness predicate over triples
``(a, b, c)``.  The miner sweeps rings of a family in increasing size and
reports every triple where the hypothesis holds and the witness predicate
fires.  Finding nothing only means nothing exists in the rings examined;
it is reported as ``none-found``, never as a proof.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from ..errors import PreconditionError
from ..rings import RingSpec, build_ring
from .checks import existence_clauses
from .context import CachedContext, Context
from .report import BranchReport, PropertyReport

FAMILIES = ("zn", "mat2")

FOUND = "found"
NONE_FOUND = "none-found"
BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class Target:
    id: str
    description: str
    hypothesis: Callable[[Context, int, int, int], bool]
    witness: Callable[[Context, int, int, int], bool]


def _t_irregular(ctx, a, b, c):
    return not ctx.is_regular(ctx.prod(c, a, b))


def _v_without_i_hyp(ctx, a, b, c):
    if not _t_irregular(ctx, a, b, c):
        return False
    t = ctx.prod(c, a, b)
    return ctx.l_ann(t) == ctx.l_ann(c) and ctx.r_ann(t) == ctx.r_ann(b)


def _iii_hyp(ctx, a, b, c):
    return _t_irregular(ctx, a, b, c) and existence_clauses(ctx, a, b, c)["iii"]


def _has(kind):
    def hyp(ctx, a, b, c):
        return bool(ctx.acceptors(kind, a, b, c))

    return hyp


def _no_bc(ctx, a, b, c):
    return ctx.bc(a, b, c) is None


TARGETS: dict[str, Target] = {
    t.id: t
    for t in (
        Target(
            "v-not-i",
            "l(t)=l(c) and r(t)=r(b) with t non-regular, yet a has no (b,c)-inverse",
            _v_without_i_hyp,
            _no_bc,
        ),
        Target(
            "iii-not-iv",
            "r(t)=r(b) and tR=cR with t non-regular, yet l(t)!=l(c) or Rt!=Rb",
            _iii_hyp,
            lambda ctx, a, b, c: not existence_clauses(ctx, a, b, c)["iv"],
        ),
        Target(
            "annihilator-not-bc",
            "an annihilator (b,c)-inverse exists but no (b,c)-inverse does",
            _has("annihilator"),
            _no_bc,
        ),
        Target(
            "hybrid-not-bc",
            "a hybrid (b,c)-inverse exists but no (b,c)-inverse does",
            _has("hybrid"),
            _no_bc,
        ),
    )
}


@dataclass
class MinerQuery:
    target: str
    family: str = "zn"
    min_n: int = 2
    max_n: int = 12
    # total number of triples the sweep may examine
    budget: int = 2_000_000
    max_witnesses: int = 20
    max_order: int = 256

    def __post_init__(self):
        if self.target not in TARGETS:
            raise PreconditionError(f"unknown miner target {self.target!r}; valid: {', '.join(TARGETS)}")
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown ring family {self.family!r}; valid: {', '.join(FAMILIES)}")
        if self.budget <= 0:
            raise PreconditionError("miner budget must be positive")
        if self.min_n < 2 or self.max_n < self.min_n:
            raise PreconditionError(f"bad modulus range {self.min_n}..{self.max_n}")

    def specs(self):
        for n in range(self.min_n, self.max_n + 1):
            if self.family == "zn":
                yield RingSpec.residue(n)
            else:
                yield RingSpec.matrix(2, RingSpec.residue(n))

    @property
    def label(self) -> str:
        return f"{self.family}:{self.min_n}..{self.max_n}"


def witness_record(ctx: Context, target: str, a: int, b: int, c: int) -> dict:
    ring = ctx.ring
    t = ctx.prod(c, a, b)
    return {
        "target": target,
        "ring": str(ring.spec),
        "inputs": {"a": a, "b": b, "c": c},
        "literals": {k: ring.format(v) for k, v in (("a", a), ("b", b), ("c", c), ("t", t))},
        "t": t,
        "t_regular": ctx.is_regular(t),
        "b_regular": ctx.is_regular(b),
        "c_regular": ctx.is_regular(c),
    }


def is_witness(ctx: Context, target: str, a: int, b: int, c: int) -> bool:
    tg = TARGETS[target]
    return tg.hypothesis(ctx, a, b, c) and tg.witness(ctx, a, b, c)


def replay_witness(record: dict) -> bool:
    """Re-check a witness through the uncached engine."""
    ring = build_ring(record["ring"], verify="none")
    i = record["inputs"]
    return is_witness(Context(ring), record["target"], i["a"], i["b"], i["c"])


def mine(query: MinerQuery) -> PropertyReport:
    target = TARGETS[query.target]
    start = time.perf_counter()
    branches: list[BranchReport] = []
    witnesses: list[dict] = []
    examined = 0
    exhausted = False
    rings_done: list[str] = []
    for spec in query.specs():
        triples = spec.order**3
        if spec.order > query.max_order or examined + triples > query.budget:
            exhausted = True
            break
        ring = build_ring(spec, verify="none")
        ctx = CachedContext(ring)
        br = BranchReport(str(spec))
        for a, b, c in itertools.product(ctx.elements, repeat=3):
            if not target.hypothesis(ctx, a, b, c):
                br.vacuous += 1
            elif target.witness(ctx, a, b, c):
                br.failures += 1
                if br.first_counterexample is None:
                    br.first_counterexample = {"theorem": f"mine:{query.target}", "inputs": {"a": a, "b": b, "c": c}}
                if len(witnesses) < query.max_witnesses:
                    witnesses.append(witness_record(ctx, query.target, a, b, c))
            else:
                br.passes += 1
        examined += triples
        branches.append(br)
        rings_done.append(str(spec))

    failures = sum(b.failures for b in branches)
    if failures:
        outcome = FOUND
    elif exhausted:
        outcome = BUDGET_EXHAUSTED
    else:
        outcome = NONE_FOUND
    notes = []
    if outcome != FOUND:
        notes.append("no witness in the rings examined; this is not evidence that none exists in general")
    if exhausted:
        notes.append(f"sweep stopped after {len(rings_done)} ring(s): budget or order cap reached")
    return PropertyReport(
        theorem_id=f"mine:{query.target}",
        ring=query.label,
        branches=branches,
        passes=sum(b.passes for b in branches),
        failures=failures,
        vacuous=sum(b.vacuous for b in branches),
        wall_time=time.perf_counter() - start,
        notes=notes,
        extra={
            "record": "mine",
            "outcome": outcome,
            "status": outcome,
            "description": target.description,
            "rings_examined": rings_done,
            "triples_examined": examined,
            "budget_exhausted": exhausted,
            "witness_count": failures,
            "witnesses": witnesses,
        },
    )
