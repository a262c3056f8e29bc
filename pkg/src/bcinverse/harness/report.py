"""Property reports and their serialisation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1

FINITE_RING_NOTE = (
    "failures were observed in a finite ring; check whether the property "
    "relies on a hypothesis that finiteness does not supply before treating "
    "this as a counterexample to the general statement"
)


@dataclass
class BranchReport:
    """Counts for one hypothesis branch of a property."""

    name: str
    passes: int = 0
    failures: int = 0
    vacuous: int = 0
    first_counterexample: dict | None = None

    @property
    def instances(self) -> int:
        return self.passes + self.failures

    def to_record(self) -> dict:
        return {
            "branch": self.name,
            "instances": self.instances,
            "passes": self.passes,
            "failures": self.failures,
            "vacuous": self.vacuous,
            "first_counterexample": self.first_counterexample,
        }


@dataclass
class PropertyReport:
    """Verdict of one theorem checker (or miner query) over a ring.

    Top-level counts are per instance tuple: a tuple fails if any branch
    fails, passes if at least one branch held and none failed, and is
    vacuous when no branch hypothesis held.  So
    ``passes + failures == instances``.  Per-branch counts live in
    ``branches``.
    """

    theorem_id: str
    ring: str
    branches: list[BranchReport] = field(default_factory=list)
    passes: int = 0
    failures: int = 0
    vacuous: int = 0
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def instances(self) -> int:
        return self.passes + self.failures

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def first_counterexample(self) -> dict | None:
        for b in self.branches:
            if b.first_counterexample is not None:
                return b.first_counterexample
        return None

    def branch(self, name: str) -> BranchReport:
        for b in self.branches:
            if b.name == name:
                return b
        raise KeyError(name)

    def to_record(self) -> dict:
        """Deterministic record; wall time lives in the output header instead."""
        rec = {
            "schema_version": SCHEMA_VERSION,
            "record": "report",
            "theorem": self.theorem_id,
            "ring": self.ring,
            "status": "pass" if self.passed else "fail",
            "instances": self.instances,
            "passes": self.passes,
            "failures": self.failures,
            "vacuous": self.vacuous,
            "first_counterexample": self.first_counterexample,
            "branches": [b.to_record() for b in self.branches],
        }
        if self.notes:
            rec["notes"] = list(self.notes)
        rec.update(self.extra)
        return rec


def dumps_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def summary_table(reports: list[PropertyReport]) -> str:
    """Fixed-width human summary, one row per report."""
    header = f"{'theorem':<34} {'ring':<14} {'status':<6} {'inst':>8} {'pass':>8} {'fail':>6} {'vacuous':>8} {'time':>8}"
    lines = [header, "-" * len(header)]
    for r in reports:
        status = r.extra.get("outcome", "pass" if r.passed else "FAIL")
        lines.append(
            f"{r.theorem_id:<34} {r.ring:<14} {status:<6} {r.instances:>8} {r.passes:>8} "
            f"{r.failures:>6} {r.vacuous:>8} {r.wall_time:>7.2f}s"
        )
        for b in r.branches:
            if b.failures:
                lines.append(f"    branch {b.name}: first counterexample {b.first_counterexample}")
    return "\n".join(lines)
