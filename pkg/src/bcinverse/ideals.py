"""One-sided ideals, annihilators and set arithmetic inside a finite ring.

Everything here is computed by full scans over the ring; no structure of
ideals is assumed.  Results are :class:`Subset` values, i.e. dense membership
maps over the ring's canonical indices.
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from .errors import RingMismatchError
from .rings import Element, ElementLike, RingHandle


class Subset:
    """Immutable set of ring elements stored as a boolean mask over indices."""

    __slots__ = ("ring", "mask", "cardinality", "_key")

    def __init__(self, ring: RingHandle, mask):
        mask = np.array(mask, dtype=bool)
        if mask.shape != (ring.order,):
            raise ValueError(f"membership map must have length {ring.order}, got {mask.shape}")
        mask.flags.writeable = False
        self.ring = ring
        self.mask = mask
        self.cardinality = int(mask.sum())
        self._key = None

    @classmethod
    def of(cls, ring: RingHandle, members: Iterable[ElementLike]) -> "Subset":
        mask = np.zeros(ring.order, dtype=bool)
        mask[[ring.index_of(m) for m in members]] = True
        return cls(ring, mask)

    @classmethod
    def whole(cls, ring: RingHandle) -> "Subset":
        return cls(ring, np.ones(ring.order, dtype=bool))

    @classmethod
    def zero(cls, ring: RingHandle) -> "Subset":
        mask = np.zeros(ring.order, dtype=bool)
        mask[ring.zero] = True
        return cls(ring, mask)

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = np.packbits(self.mask).tobytes()
        return self._key

    def indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.mask)]

    def elements(self) -> list[Element]:
        return [Element(self.ring, i) for i in self.indices()]

    def __contains__(self, x: ElementLike) -> bool:
        return bool(self.mask[self.ring.index_of(x)])

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self):
        return iter(self.indices())

    def _check(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(f"subsets of {self.ring.spec} and {other.ring.spec} combined")

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self is other or (self.ring == other.ring and self.key == other.key)

    def __hash__(self):
        return hash((self.ring.spec, self.key))

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ring, self.mask & other.mask)

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ring, self.mask | other.mask)

    def __le__(self, other: "Subset") -> bool:
        self._check(other)
        return not np.any(self.mask & ~other.mask)

    def __ge__(self, other: "Subset") -> bool:
        return other <= self

    @property
    def is_zero(self) -> bool:
        return self.cardinality == 1 and bool(self.mask[self.ring.zero])

    @property
    def is_whole(self) -> bool:
        return self.cardinality == self.ring.order

    def __repr__(self):
        items = ",".join(str(i) for i in self.indices()[:16])
        more = ",..." if self.cardinality > 16 else ""
        return f"Subset({self.ring.spec}, {{{items}{more}}})"

    def to_record(self) -> list[int]:
        return self.indices()


SubsetLike = Union[Subset, Element, int]


def _from_values(ring: RingHandle, values) -> Subset:
    mask = np.zeros(ring.order, dtype=bool)
    mask[np.asarray(values).ravel()] = True
    return Subset(ring, mask)


def right_ideal(ring: RingHandle, a: ElementLike) -> Subset:
    """``aR``."""
    return _from_values(ring, ring.mul_row(a))


def left_ideal(ring: RingHandle, a: ElementLike) -> Subset:
    """``Ra``."""
    return _from_values(ring, ring.mul_col(a))


def sandwich_set(ring: RingHandle, x: ElementLike, z: ElementLike) -> Subset:
    """``xRz = {x*r*z : r in R}``."""
    return _from_values(ring, ring.vmul(ring.mul_row(x), ring.index_of(z)))


def _members(ring: RingHandle, s: SubsetLike) -> np.ndarray:
    if isinstance(s, Subset):
        if s.ring != ring:
            raise RingMismatchError(f"subset of {s.ring.spec} used in {ring.spec}")
        return np.flatnonzero(s.mask)
    return np.array([ring.index_of(s)])


def left_annihilator(ring: RingHandle, s: SubsetLike) -> Subset:
    """``l(S) = {y : y*x = 0 for all x in S}``; ``s`` may be a single element."""
    mask = np.ones(ring.order, dtype=bool)
    for x in _members(ring, s):
        mask &= ring.mul_col(int(x)) == ring.zero
    return Subset(ring, mask)


def right_annihilator(ring: RingHandle, s: SubsetLike) -> Subset:
    """``r(S) = {y : x*y = 0 for all x in S}``."""
    mask = np.ones(ring.order, dtype=bool)
    for x in _members(ring, s):
        mask &= ring.mul_row(int(x)) == ring.zero
    return Subset(ring, mask)


def double_annihilators(ring: RingHandle, a: ElementLike) -> tuple[Subset, Subset]:
    """``(rl(a), lr(a))``."""
    rl = right_annihilator(ring, left_annihilator(ring, a))
    lr = left_annihilator(ring, right_annihilator(ring, a))
    return rl, lr


def subset_sum(s: Subset, t: Subset) -> Subset:
    """``S + T = {s + t}``, stopping early once the sum is the whole ring."""
    s._check(t)
    ring = s.ring
    t_idx = np.flatnonzero(t.mask)
    mask = np.zeros(ring.order, dtype=bool)
    for x in np.flatnonzero(s.mask):
        mask[ring.vadd(int(x), t_idx)] = True
        if mask.all():
            break
    return Subset(ring, mask)


def subset_intersection(s: Subset, t: Subset) -> Subset:
    return s & t


def subset_equal(s: Subset, t: Subset) -> bool:
    s._check(t)
    return s == t


def is_direct_sum_of_ring(s: Subset, t: Subset) -> bool:
    """True iff ``R = S + T`` and ``S ∩ T = {0}``."""
    return (s & t).is_zero and subset_sum(s, t).is_whole
