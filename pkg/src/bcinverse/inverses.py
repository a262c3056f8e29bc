"""Generalized inverses in a finite ring.

Each inverse notion has an exhaustive scan that tests its defining
equations literally; that scan is the ground truth.  Closed formulas
(Bott-Duffin with ``e = f``, the transfer formulas) are evaluated too, but
always compared against a scan before being returned.

``not-found`` is an ordinary outcome.  :class:`EngineInconsistency` is
raised only when something that is a theorem fails (two distinct
(b,c)-inverses, a formula disagreeing with its scan); that is a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import EngineInconsistency, PreconditionError
from .ideals import (
    Subset,
    left_annihilator,
    left_ideal,
    right_annihilator,
    right_ideal,
    sandwich_set,
)
from .rings import Element, ElementLike, RingHandle

FOUND = "found"
NOT_FOUND = "not-found"

DEFINITION = "definition-search"
LEMMA = "lemma-characterization"
FORMULA = "closed-formula"


@dataclass
class InverseResult:
    kind: str
    status: str
    value: Element | None
    method: str
    inputs: dict[str, int] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def index(self) -> int | None:
        return None if self.value is None else self.value.index

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "inputs": dict(self.inputs),
            "status": self.status,
            "value": self.index,
            "method": self.method,
            "witnesses": dict(self.witnesses),
        }


@dataclass
class DrazinResult(InverseResult):
    drazin_index: int = 0


def _idx(ring: RingHandle, **named: ElementLike) -> dict[str, int]:
    return {k: ring.index_of(v) for k, v in named.items()}


def _one_or_none(ring: RingHandle, kind: str, found: list[int]) -> int | None:
    if len(found) > 1:
        raise EngineInconsistency(f"{kind}: {len(found)} distinct acceptors {found} in {ring.spec}")
    return found[0] if found else None


def _result(ring, kind, y, method, inputs, witnesses=None) -> InverseResult:
    return InverseResult(
        kind=kind,
        status=FOUND if y is not None else NOT_FOUND,
        value=None if y is None else Element(ring, y),
        method=method,
        inputs=inputs,
        witnesses=witnesses or {},
    )


def _outer_candidates(ring: RingHandle, a: int) -> np.ndarray:
    """All y with y*a*y = y."""
    ys = ring.indices
    return np.flatnonzero(ring.vmul(ring.mul_col(a), ys) == ys)


# ---------------------------------------------------------------------------
# inner / group / Drazin


def inner_inverses(ring: RingHandle, a: ElementLike) -> Subset:
    """``{x : a*x*a = a}``."""
    a = ring.index_of(a)
    axa = ring.vmul(ring.mul_row(a), a)
    return Subset(ring, axa == a)


def is_regular(ring: RingHandle, a: ElementLike) -> bool:
    return inner_inverses(ring, a).cardinality > 0


def group_inverse(ring: RingHandle, a: ElementLike) -> InverseResult:
    a = ring.index_of(a)
    xs = ring.indices
    ax, xa = ring.mul_row(a), ring.mul_col(a)
    cand = (ax == xa) & (ring.vmul(ax, a) == a) & (ring.vmul(xa, xs) == xs)
    y = _one_or_none(ring, "group inverse", [int(x) for x in np.flatnonzero(cand)])
    return _result(ring, "group", y, DEFINITION, {"a": a})


def drazin_inverse(ring: RingHandle, a: ElementLike) -> DrazinResult:
    """Smallest index ``j >= 1`` and the unique ``x`` with ``xa = ax``,
    ``xax = x`` and ``a^(j+1) x = a^j``.

    In a finite ring the powers of ``a`` repeat after at most ``|R|`` steps,
    so ``j <= |R|`` and the search always terminates with a value.
    """
    a = ring.index_of(a)
    xs = ring.indices
    ax, xa = ring.mul_row(a), ring.mul_col(a)
    base = (ax == xa) & (ring.vmul(xa, xs) == xs)
    aj = a
    for j in range(1, ring.order + 1):
        aj1 = ring.mul(aj, a)
        cand = base & (ring.mul_row(aj1) == aj)
        hits = [int(x) for x in np.flatnonzero(cand)]
        if hits:
            y = _one_or_none(ring, "Drazin inverse", hits)
            return DrazinResult(
                kind="drazin",
                status=FOUND,
                value=Element(ring, y),
                method=DEFINITION,
                inputs={"a": a},
                witnesses={"index": j},
                drazin_index=j,
            )
        aj = aj1
    raise EngineInconsistency(f"no Drazin inverse of {a} within index bound {ring.order}")


# ---------------------------------------------------------------------------
# (b,c)-inverse and its relatives


def bc_acceptors(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> list[int]:
    """Every y with ``y in bRy ∩ yRc``, ``yab = b`` and ``cay = c``."""
    a, b, c = ring.index_of(a), ring.index_of(b), ring.index_of(c)
    yab = ring.vmul(ring.mul_col(a), b)
    cay = ring.vmul(c, ring.mul_row(a))
    out = []
    for y in np.flatnonzero((yab == b) & (cay == c)):
        y = int(y)
        if y in sandwich_set(ring, b, y) and y in sandwich_set(ring, y, c):
            out.append(y)
    return out


def bc_inverse(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> InverseResult:
    inputs = _idx(ring, a=a, b=b, c=c)
    a, b, c = inputs["a"], inputs["b"], inputs["c"]
    y = _one_or_none(ring, "(b,c)-inverse", bc_acceptors(ring, a, b, c))
    if y is None:
        return _result(ring, "bc", None, DEFINITION, inputs)
    r = int(np.flatnonzero(ring.vmul(ring.mul_row(b), y) == y)[0])
    s = int(np.flatnonzero(ring.vmul(ring.mul_row(y), c) == y)[0])
    witnesses = {"r": r, "s": s, "yab": ring.prod(y, a, b), "cay": ring.prod(c, a, y)}
    return _result(ring, "bc", y, DEFINITION, inputs, witnesses)


def lemma_acceptors(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> list[int]:
    """Every y with ``yay = y``, ``yR = bR`` and ``Ry = Rc``."""
    a, b, c = ring.index_of(a), ring.index_of(b), ring.index_of(c)
    bR, Rc = right_ideal(ring, b), left_ideal(ring, c)
    return [
        int(y)
        for y in _outer_candidates(ring, a)
        if right_ideal(ring, int(y)) == bR and left_ideal(ring, int(y)) == Rc
    ]


def bc_inverse_via_lemma(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> InverseResult:
    inputs = _idx(ring, a=a, b=b, c=c)
    y = _one_or_none(ring, "(b,c)-inverse (ideal form)", lemma_acceptors(ring, **inputs))
    return _result(ring, "bc", y, LEMMA, inputs)


def bc_exists_via_ideals(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> bool:
    """``Rb = Rt`` and ``cR = tR`` where ``t = cab``."""
    a, b, c = ring.index_of(a), ring.index_of(b), ring.index_of(c)
    t = ring.prod(c, a, b)
    return left_ideal(ring, b) == left_ideal(ring, t) and right_ideal(ring, c) == right_ideal(ring, t)


def hybrid_acceptors(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> list[int]:
    """Every y with ``yay = y``, ``yR = bR`` and ``r(y) = r(c)``."""
    a, b, c = ring.index_of(a), ring.index_of(b), ring.index_of(c)
    bR, rc = right_ideal(ring, b), right_annihilator(ring, c)
    return [
        int(y)
        for y in _outer_candidates(ring, a)
        if right_ideal(ring, int(y)) == bR and right_annihilator(ring, int(y)) == rc
    ]


def annihilator_acceptors(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> list[int]:
    """Every y with ``yay = y``, ``l(y) = l(b)`` and ``r(y) = r(c)``."""
    a, b, c = ring.index_of(a), ring.index_of(b), ring.index_of(c)
    lb, rc = left_annihilator(ring, b), right_annihilator(ring, c)
    return [
        int(y)
        for y in _outer_candidates(ring, a)
        if left_annihilator(ring, int(y)) == lb and right_annihilator(ring, int(y)) == rc
    ]


def _relative_result(ring, kind, hits, inputs) -> InverseResult:
    # Uniqueness of these relatives is not assumed; all acceptors are reported.
    y = hits[0] if hits else None
    return _result(ring, kind, y, DEFINITION, inputs, {"acceptors": hits} if hits else {})


def hybrid_bc_inverse(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> InverseResult:
    inputs = _idx(ring, a=a, b=b, c=c)
    return _relative_result(ring, "hybrid", hybrid_acceptors(ring, **inputs), inputs)


def annihilator_bc_inverse(ring: RingHandle, a: ElementLike, b: ElementLike, c: ElementLike) -> InverseResult:
    inputs = _idx(ring, a=a, b=b, c=c)
    return _relative_result(ring, "annihilator", annihilator_acceptors(ring, **inputs), inputs)


# ---------------------------------------------------------------------------
# idempotent-based inverses


def _require_idempotent(ring: RingHandle, **named: int) -> None:
    for name, x in named.items():
        if not ring.is_idempotent(x):
            raise PreconditionError(f"{name}={ring.format(x)} is not idempotent")


def bott_duffin(
    ring: RingHandle,
    a: ElementLike,
    e: ElementLike,
    f: ElementLike,
    *,
    cross_check: bool = True,
) -> InverseResult:
    """The y with ``y = ey = yf``, ``yae = e`` and ``fay = f``.

    For ``e = f`` the scan is compared with ``e (ae + 1 - e)^(-1)``.
    """
    inputs = _idx(ring, a=a, e=e, f=f)
    a, e, f = inputs["a"], inputs["e"], inputs["f"]
    _require_idempotent(ring, e=e, f=f)
    ys = ring.indices
    ya = ring.mul_col(a)
    cand = (
        (ring.mul_col(f) == ys)
        & (ring.mul_row(e) == ys)
        & (ring.vmul(ya, e) == e)
        & (ring.vmul(f, ring.mul_row(a)) == f)
    )
    y = _one_or_none(ring, "Bott-Duffin inverse", [int(x) for x in np.flatnonzero(cand)])
    witnesses: dict[str, Any] = {}
    if e == f:
        u = ring.sub(ring.add(ring.mul(a, e), ring.one), e)
        witnesses["ae+1-e"] = u
        formula = ring.mul(e, ring.unit_inverse(u)) if ring.is_unit(u) else None
        witnesses["formula"] = formula
        if cross_check and formula != y:
            raise EngineInconsistency(
                f"Bott-Duffin formula gives {formula}, scan gives {y} for a={a}, e={e} in {ring.spec}"
            )
    return _result(ring, "bott-duffin", y, DEFINITION, inputs, witnesses)


def image_kernel_inverse(ring: RingHandle, a: ElementLike, p: ElementLike, q: ElementLike) -> InverseResult:
    """The c with ``cac = c``, ``caR = pR`` and ``(1 - ac)R = qR``."""
    inputs = _idx(ring, a=a, p=p, q=q)
    a, p, q = inputs["a"], inputs["p"], inputs["q"]
    _require_idempotent(ring, p=p, q=q)
    pR, qR = right_ideal(ring, p), right_ideal(ring, q)
    hits = []
    for x in _outer_candidates(ring, a):
        x = int(x)
        if right_ideal(ring, ring.mul(x, a)) != pR:
            continue
        if right_ideal(ring, ring.sub(ring.one, ring.mul(a, x))) != qR:
            continue
        hits.append(x)
    y = _one_or_none(ring, "image-kernel inverse", hits)
    return _result(ring, "image-kernel", y, DEFINITION, inputs)


# ---------------------------------------------------------------------------
# transfer formulas


def _transfer_setup(ring, a, b, c, inner, side):
    base = bc_inverse(ring, a, b, c)
    if not base.found:
        raise PreconditionError("transfer needs the (b,c)-inverse of a to exist")
    target = b if side == "b" else c
    if ring.prod(target, inner, target) != target:
        raise PreconditionError(f"{ring.format(inner)} is not an inner inverse of {side}={ring.format(target)}")
    return base.index


def transfer_d_inverse(
    ring: RingHandle,
    a: ElementLike,
    d: ElementLike,
    b: ElementLike,
    c: ElementLike,
    b_inner: ElementLike,
    *,
    cross_check: bool = True,
) -> InverseResult:
    """(b,c)-inverse of ``d`` as ``(y d e + 1 - e)^(-1) y`` where ``y`` is the
    (b,c)-inverse of ``a`` and ``e = b * b_inner``."""
    inputs = _idx(ring, a=a, d=d, b=b, c=c, b_inner=b_inner)
    a, d, b, c, bi = (inputs[k] for k in ("a", "d", "b", "c", "b_inner"))
    y = _transfer_setup(ring, a, b, c, bi, "b")
    e = ring.mul(b, bi)
    x = ring.sub(ring.add(ring.prod(y, d, e), ring.one), e)
    value = ring.mul(ring.unit_inverse(x), y) if ring.is_unit(x) else None
    witnesses = {"a_bc": y, "e": e, "x": x}
    if cross_check:
        scanned = bc_inverse(ring, d, b, c).index
        if scanned != value:
            raise EngineInconsistency(f"transfer formula gives {value}, scan gives {scanned} ({inputs})")
    return _result(ring, "bc", value, FORMULA, inputs, witnesses)


def transfer_d_inverse_dual(
    ring: RingHandle,
    a: ElementLike,
    d: ElementLike,
    b: ElementLike,
    c: ElementLike,
    c_inner: ElementLike,
    *,
    cross_check: bool = True,
) -> InverseResult:
    """Mirror of :func:`transfer_d_inverse`: ``y (f d y + 1 - f)^(-1)`` with
    ``f = c_inner * c``."""
    inputs = _idx(ring, a=a, d=d, b=b, c=c, c_inner=c_inner)
    a, d, b, c, ci = (inputs[k] for k in ("a", "d", "b", "c", "c_inner"))
    y = _transfer_setup(ring, a, b, c, ci, "c")
    f = ring.mul(ci, c)
    x = ring.sub(ring.add(ring.prod(f, d, y), ring.one), f)
    value = ring.mul(y, ring.unit_inverse(x)) if ring.is_unit(x) else None
    witnesses = {"a_bc": y, "f": f, "x": x}
    if cross_check:
        scanned = bc_inverse(ring, d, b, c).index
        if scanned != value:
            raise EngineInconsistency(f"dual transfer formula gives {value}, scan gives {scanned} ({inputs})")
    return _result(ring, "bc", value, FORMULA, inputs, witnesses)


def bc_idempotents(ring: RingHandle, a: ElementLike, y: ElementLike) -> tuple[ElementLike, ElementLike]:
    """``(ya, ay)`` for an outer inverse ``y`` of ``a``."""
    ai, yi = ring.index_of(a), ring.index_of(y)
    if ring.prod(yi, ai, yi) != yi:
        raise PreconditionError(f"{ring.format(yi)} is not an outer inverse of {ring.format(ai)}")
    ya, ay = ring.mul(y, a), ring.mul(a, y)
    for z in (ya, ay):
        if not ring.is_idempotent(z):
            raise EngineInconsistency(f"{ring.format(ring.index_of(z))} should be idempotent")
    return ya, ay


def is_moore_penrose(ring: RingHandle, a: ElementLike, x: ElementLike) -> bool:
    """The four Penrose equations with transpose as the involution."""
    a, x = ring.index_of(a), ring.index_of(x)
    ax, xa = ring.mul(a, x), ring.mul(x, a)
    return (
        ring.mul(ax, a) == a
        and ring.mul(xa, x) == x
        and ring.transpose(ax) == ax
        and ring.transpose(xa) == xa
    )


def verify_witnesses(ring: RingHandle, result: InverseResult) -> bool:
    """Re-evaluate a found (b,c)-inverse's recorded witness equations."""
    if not result.found or result.kind != "bc" or result.method != DEFINITION:
        return result.found
    a, b, c = (result.inputs[k] for k in "abc")
    y, w = result.index, result.witnesses
    return (
        ring.prod(b, w["r"], y) == y
        and ring.prod(y, w["s"], c) == y
        and ring.prod(y, a, b) == b == w["yab"]
        and ring.prod(c, a, y) == c == w["cay"]
    )
