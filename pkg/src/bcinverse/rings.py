"""Finite unital rings with canonical element indexing.

Three constructions are supported: residue rings ``Z_n``, matrix rings
``M_k(S)`` over any supported ring ``S`` and finite direct products.  Every
element of a ring of order ``N`` is identified by a canonical index in
``range(N)``; index 0 is always zero.

Arithmetic is computed from the ring description on the fly.  For rings of order at most
:data:`TABLE_MAX_ORDER` the addition and multiplication tables are built once
(vectorised, on first use) and reused by every operation.

Ring spec grammar::

    zn:<n> | mat:<k>:<spec> | prod:<spec>,<spec>,...

A nested ``prod`` inside a product list must be parenthesised, e.g.
``prod:(prod:zn:2,zn:3),zn:5``; so must a product used as a matrix entry
ring, ``mat:2:(prod:zn:2,zn:3)``.  Any spec may be wrapped in parentheses.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import (
    CardinalityExceeded,
    LiteralError,
    NotAUnitError,
    PreconditionError,
    RingAxiomError,
    RingMismatchError,
    RingSpecError,
)

DEFAULT_MAX_ORDER = 65536
TABLE_MAX_ORDER = 4096
MAX_ORDER_ENV = "BCINV_MAX_ORDER"


def default_max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise RingSpecError(f"{MAX_ORDER_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise RingSpecError(f"{MAX_ORDER_ENV} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# Specs


@dataclass(frozen=True)
class RingSpec:
    """Description of a finite ring; build it with :func:`build_ring`."""

    kind: str
    n: int = 0
    k: int = 0
    inner: "RingSpec | None" = None
    parts: tuple["RingSpec", ...] = ()

    @classmethod
    def residue(cls, n: int) -> "RingSpec":
        return cls("residue", n=n).validated()

    @classmethod
    def matrix(cls, k: int, inner: "RingSpec | int") -> "RingSpec":
        if isinstance(inner, int):
            inner = cls.residue(inner)
        return cls("matrix", k=k, inner=inner).validated()

    @classmethod
    def product(cls, *parts: "RingSpec") -> "RingSpec":
        return cls("product", parts=tuple(parts)).validated()

    def validated(self) -> "RingSpec":
        if self.kind == "residue":
            if not isinstance(self.n, int) or self.n < 2:
                raise RingSpecError(f"residue modulus must be an integer >= 2, got {self.n!r}")
        elif self.kind == "matrix":
            if not isinstance(self.k, int) or self.k < 1:
                raise RingSpecError(f"matrix size must be an integer >= 1, got {self.k!r}")
            if not isinstance(self.inner, RingSpec):
                raise RingSpecError("matrix spec needs an inner ring spec")
            self.inner.validated()
        elif self.kind == "product":
            if not self.parts:
                raise RingSpecError("product spec needs at least one factor")
            for part in self.parts:
                if not isinstance(part, RingSpec):
                    raise RingSpecError(f"product factor {part!r} is not a RingSpec")
                part.validated()
        else:
            raise RingSpecError(f"unknown ring kind {self.kind!r}")
        return self

    @property
    def order(self) -> int:
        if self.kind == "residue":
            return self.n
        if self.kind == "matrix":
            return self.inner.order ** (self.k * self.k)
        return math.prod(p.order for p in self.parts)

    def __str__(self) -> str:
        if self.kind == "residue":
            return f"zn:{self.n}"
        if self.kind == "matrix":
            inner = f"({self.inner})" if self.inner.kind == "product" else str(self.inner)
            return f"mat:{self.k}:{inner}"
        items = []
        for p in self.parts:
            items.append(f"({p})" if p.kind == "product" else str(p))
        return "prod:" + ",".join(items)


def _split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced ')'")
        elif ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ValueError("unbalanced '('")
    out.append(text[start:])
    return out


def _closes_at_end(text: str) -> bool:
    """True when the '(' at position 0 is matched by the final character."""
    depth = 0
    for i, ch in enumerate(text):
        depth += (ch == "(") - (ch == ")")
        if depth == 0:
            return i == len(text) - 1
    return False


def _parse_int(token: str, what: str, full: str) -> int:
    if not token.isdigit():
        raise RingSpecError(f"malformed ring spec {full!r}: {what} {token!r} is not a positive integer")
    return int(token)


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``zn:<n>``, ``mat:<k>:<spec>`` or ``prod:<spec>,...``."""
    full = text
    text = text.strip()
    if text.startswith("(") and _closes_at_end(text):
        return parse_ring_spec(text[1:-1])
    head, _, rest = text.partition(":")
    if head == "zn":
        return RingSpec.residue(_parse_int(rest, "modulus", full))
    if head == "mat":
        k_tok, sep, inner = rest.partition(":")
        if not sep or not inner:
            raise RingSpecError(f"malformed ring spec {full!r}: expected mat:<k>:<spec>")
        return RingSpec.matrix(_parse_int(k_tok, "matrix size", full), parse_ring_spec(inner))
    if head == "prod":
        try:
            items = _split_top(rest, ",")
        except ValueError as exc:
            raise RingSpecError(f"malformed ring spec {full!r}: {exc}") from None
        # An unparenthesised nested prod swallows the remainder of the list.
        parts: list[RingSpec] = []
        for i, item in enumerate(items):
            if item.strip().startswith("prod:"):
                parts.append(parse_ring_spec(",".join(items[i:])))
                break
            if not item.strip():
                raise RingSpecError(f"malformed ring spec {full!r}: empty product factor")
            parts.append(parse_ring_spec(item))
        return RingSpec.product(*parts)
    raise RingSpecError(f"malformed ring spec {full!r}: unknown kind {head!r} (expected zn, mat or prod)")


# ---------------------------------------------------------------------------
# Elements


class Element:
    """A member of a specific ring, identified by its canonical index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring: "RingHandle", index: int):
        self.ring = ring
        self.index = index

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.index == other.index and self.ring == other.ring

    def __hash__(self):
        return hash((self.ring.spec, self.index))

    def __index__(self):
        return self.index

    def __repr__(self):
        return f"Element({self.ring.spec}, {self.ring.format(self.index)})"

    def __str__(self):
        return self.ring.format(self.index)

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, j: int):
        return self.ring.power(self, j)

    @property
    def value(self):
        return self.ring.decode(self.index)


ElementLike = Union[Element, int]


# ---------------------------------------------------------------------------
# Rings


class RingHandle:
    """A finite unital ring.  Immutable once constructed.

    Operations accept :class:`Element` objects or bare canonical indices.
    Element-returning operations return :class:`Element` when any argument
    was an Element and a bare index otherwise, so hot loops can stay on ints.
    """

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.order = spec.order
        self._all = np.arange(self.order, dtype=np.int64)
        self.zero = 0
        self.one = self.encode(self._one_value())

    # -- subclass hooks: vectorised ops on int64 index arrays --------------
    def _vadd(self, xs, ys):
        raise NotImplementedError

    def _vmul(self, xs, ys):
        raise NotImplementedError

    def _vneg(self, xs):
        raise NotImplementedError

    def _vtranspose(self, xs):
        raise NotImplementedError

    def _one_value(self):
        raise NotImplementedError

    def encode(self, value) -> int:
        raise NotImplementedError

    def decode(self, index: int):
        raise NotImplementedError

    def parse_literal(self, token: str) -> int:
        raise NotImplementedError

    def format(self, index: int) -> str:
        raise NotImplementedError

    @property
    def is_commutative_kind(self) -> bool:
        return False

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, RingHandle) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<RingHandle {self.spec} order={self.order}>"

    # -- tables -------------------------------------------------------------
    @property
    def has_tables(self) -> bool:
        return self.order <= TABLE_MAX_ORDER

    @cached_property
    def add_table(self) -> np.ndarray:
        if not self.has_tables:
            raise PreconditionError(f"no memoised tables for order {self.order} > {TABLE_MAX_ORDER}")
        t = self._vadd(self._all[:, None], self._all[None, :]).astype(np.int32)
        t.flags.writeable = False
        return t

    @cached_property
    def mul_table(self) -> np.ndarray:
        if not self.has_tables:
            raise PreconditionError(f"no memoised tables for order {self.order} > {TABLE_MAX_ORDER}")
        t = self._vmul(self._all[:, None], self._all[None, :]).astype(np.int32)
        t.flags.writeable = False
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        t = self._vneg(self._all)
        t.flags.writeable = False
        return t

    @cached_property
    def transpose_table(self) -> np.ndarray:
        t = self._vtranspose(self._all)
        t.flags.writeable = False
        return t

    @cached_property
    def _add_rows(self) -> list[list[int]]:
        return self.add_table.tolist()

    @cached_property
    def _mul_rows(self) -> list[list[int]]:
        return self.mul_table.tolist()

    # -- vector access used by scans ---------------------------------------
    def vmul(self, xs, ys) -> np.ndarray:
        """Elementwise product of index arrays (broadcasting)."""
        if self.has_tables:
            return self.mul_table[xs, ys]
        return self._vmul(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64))

    def vadd(self, xs, ys) -> np.ndarray:
        if self.has_tables:
            return self.add_table[xs, ys]
        return self._vadd(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64))

    def mul_row(self, x: ElementLike) -> np.ndarray:
        """``[x*r for r in R]`` in index order."""
        x = self.index_of(x)
        if self.has_tables:
            return self.mul_table[x]
        return self._vmul(np.int64(x), self._all)

    def mul_col(self, y: ElementLike) -> np.ndarray:
        """``[r*y for r in R]`` in index order."""
        y = self.index_of(y)
        if self.has_tables:
            return self.mul_table[:, y]
        return self._vmul(self._all, np.int64(y))

    @property
    def indices(self) -> np.ndarray:
        return self._all

    # -- element plumbing ---------------------------------------------------
    def index_of(self, x: ElementLike) -> int:
        if isinstance(x, Element):
            if x.ring is not self and x.ring != self:
                raise RingMismatchError(f"element of {x.ring.spec} used in {self.spec}")
            return x.index
        if isinstance(x, (bool, np.bool_)):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, (int, np.integer)):
            x = int(x)
            if not 0 <= x < self.order:
                raise ValueError(f"index {x} out of range for ring of order {self.order}")
            return x
        raise TypeError(f"expected Element or int index, got {type(x).__name__}")

    def element(self, x) -> Element:
        """Wrap an index, or encode a plain value (int / sequence) as an Element."""
        if isinstance(x, (Element, int, np.integer)) and not isinstance(x, bool):
            return Element(self, self.index_of(x))
        return Element(self, self.encode(x))

    def literal(self, token: str) -> Element:
        return Element(self, self.parse_literal(token))

    def elements(self) -> Iterator[Element]:
        for i in range(self.order):
            yield Element(self, i)

    def _wrap(self, result: int, args) -> ElementLike:
        if any(isinstance(a, Element) for a in args):
            return Element(self, result)
        return result

    # -- arithmetic ---------------------------------------------------------
    def add(self, x: ElementLike, y: ElementLike) -> ElementLike:
        i, j = self.index_of(x), self.index_of(y)
        if self.has_tables:
            r = self._add_rows[i][j] if self.order <= 1024 else int(self.add_table[i, j])
        else:
            r = int(self._vadd(np.int64(i), np.int64(j)))
        return self._wrap(r, (x, y))

    def mul(self, x: ElementLike, y: ElementLike) -> ElementLike:
        i, j = self.index_of(x), self.index_of(y)
        if self.has_tables:
            r = self._mul_rows[i][j] if self.order <= 1024 else int(self.mul_table[i, j])
        else:
            r = int(self._vmul(np.int64(i), np.int64(j)))
        return self._wrap(r, (x, y))

    def neg(self, x: ElementLike) -> ElementLike:
        return self._wrap(int(self.neg_table[self.index_of(x)]), (x,))

    def sub(self, x: ElementLike, y: ElementLike) -> ElementLike:
        r = self.add(self.index_of(x), self.neg(self.index_of(y)))
        return self._wrap(r, (x, y))

    def prod(self, *xs: ElementLike) -> ElementLike:
        """Left-to-right product of one or more elements."""
        if not xs:
            raise PreconditionError("prod needs at least one factor")
        acc = self.index_of(xs[0])
        for x in xs[1:]:
            acc = self.mul(acc, self.index_of(x))
        return self._wrap(acc, xs)

    def power(self, x: ElementLike, j: int) -> ElementLike:
        if not isinstance(j, int) or j < 1:
            raise PreconditionError(f"power exponent must be an integer >= 1, got {j!r}")
        base = self.index_of(x)
        acc = base
        for _ in range(j - 1):
            acc = self.mul(acc, base)
        return self._wrap(acc, (x,))

    def transpose(self, x: ElementLike) -> ElementLike:
        return self._wrap(int(self.transpose_table[self.index_of(x)]), (x,))

    def is_idempotent(self, x: ElementLike) -> bool:
        i = self.index_of(x)
        return self.mul(i, i) == i

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        sq = self.vmul(self._all, self._all)
        return tuple(int(i) for i in np.flatnonzero(sq == self._all))

    @cached_property
    def _unit_inverses(self) -> np.ndarray:
        """inv[x] = two-sided inverse of x, or -1; found by full scan."""
        inv = np.full(self.order, -1, dtype=np.int64)
        for x in range(self.order):
            right = np.flatnonzero(self.mul_row(x) == self.one)
            for y in right:
                if self.mul(int(y), x) == self.one:
                    inv[x] = int(y)
                    break
        inv.flags.writeable = False
        return inv

    def is_unit(self, x: ElementLike) -> bool:
        return bool(self._unit_inverses[self.index_of(x)] >= 0)

    def unit_inverse(self, x: ElementLike) -> ElementLike:
        i = self.index_of(x)
        inv = int(self._unit_inverses[i])
        if inv < 0:
            raise NotAUnitError(f"{self.format(i)} is not a unit in {self.spec}")
        return self._wrap(inv, (x,))

    # -- axiom verification ------------------------------------------------
    def verify_axioms(self, mode: str = "sample", samples: int = 128, seed: int = 0) -> None:
        """Check ring axioms on sampled (or all, ``mode="full"``) triples."""
        if mode == "none":
            return
        n = self.order
        if mode == "full":
            for x0 in range(n):
                y, z = (g.ravel() for g in np.meshgrid(self._all, self._all, indexing="ij"))
                self._check_axioms(np.full_like(y, x0), y, z)
        elif mode == "sample":
            rng = np.random.default_rng(seed)
            x, y, z = rng.integers(0, n, size=(3, max(samples, 100)))
            self._check_axioms(x, y, z)
        else:
            raise ValueError(f"unknown axiom check mode {mode!r}")

    def _check_axioms(self, x, y, z) -> None:
        add, mul = self.vadd, self.vmul
        checks = {
            "additive associativity": add(add(x, y), z) == add(x, add(y, z)),
            "additive commutativity": add(x, y) == add(y, x),
            "multiplicative associativity": mul(mul(x, y), z) == mul(x, mul(y, z)),
            "left distributivity": mul(x, add(y, z)) == add(mul(x, y), mul(x, z)),
            "right distributivity": mul(add(x, y), z) == add(mul(x, z), mul(y, z)),
            "zero": (add(x, 0) == x) & (mul(x, 0) == 0) & (mul(0, x) == 0),
            "one": (mul(x, self.one) == x) & (mul(self.one, x) == x),
            "negation": add(x, self._vneg(np.asarray(x, dtype=np.int64))) == 0,
        }
        for name, ok in checks.items():
            if not np.all(ok):
                bad = int(np.flatnonzero(~np.asarray(ok))[0])
                raise RingAxiomError(
                    f"{name} fails in {self.spec} at ({int(x[bad])}, {int(y[bad])}, {int(z[bad])})"
                )


class ResidueRing(RingHandle):
    """``Z_n``; the index of a residue is the residue itself."""

    def __init__(self, spec: RingSpec):
        self.n = spec.n
        super().__init__(spec)

    @property
    def is_commutative_kind(self):
        return True

    def _vadd(self, xs, ys):
        return (xs + ys) % self.n

    def _vmul(self, xs, ys):
        return (xs * ys) % self.n

    def _vneg(self, xs):
        return (-xs) % self.n

    def _vtranspose(self, xs):
        return np.asarray(xs, dtype=np.int64).copy()

    def _one_value(self):
        return 1

    def encode(self, value) -> int:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise LiteralError(str(value), f"expected an integer residue mod {self.n}")
        if not 0 <= value < self.n:
            raise LiteralError(str(value), f"residue out of range 0..{self.n - 1}")
        return int(value)

    def decode(self, index: int) -> int:
        return self.index_of(index)

    def parse_literal(self, token: str) -> int:
        t = token.strip()
        if not t.isdigit():
            raise LiteralError(token, f"expected a decimal residue mod {self.n}")
        return self.encode(int(t))

    def format(self, index: int) -> str:
        return str(index)


class ProductRing(RingHandle):
    """Direct product; mixed-radix indexing with the first factor most significant."""

    def __init__(self, spec: RingSpec, factors: Sequence[RingHandle]):
        self.factors = tuple(factors)
        strides = []
        s = 1
        for f in reversed(self.factors):
            strides.append(s)
            s *= f.order
        self.strides = tuple(reversed(strides))
        super().__init__(spec)

    @property
    def is_commutative_kind(self):
        return all(f.is_commutative_kind for f in self.factors)

    def _split(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        return [(xs // s) % f.order for f, s in zip(self.factors, self.strides)]

    def _join(self, comps):
        out = 0
        for c, s in zip(comps, self.strides):
            out = out + np.asarray(c, dtype=np.int64) * s
        return out

    def _vadd(self, xs, ys):
        return self._join(f.vadd(a, b) for f, a, b in zip(self.factors, self._split(xs), self._split(ys)))

    def _vmul(self, xs, ys):
        return self._join(f.vmul(a, b) for f, a, b in zip(self.factors, self._split(xs), self._split(ys)))

    def _vneg(self, xs):
        return self._join(f.neg_table[a] for f, a in zip(self.factors, self._split(xs)))

    def _vtranspose(self, xs):
        return self._join(f.transpose_table[a] for f, a in zip(self.factors, self._split(xs)))

    def _one_value(self):
        return tuple(f.decode(f.one) for f in self.factors)

    def encode(self, value) -> int:
        if not isinstance(value, (tuple, list)) or len(value) != len(self.factors):
            raise LiteralError(str(value), f"expected {len(self.factors)} components")
        return int(sum(f.encode(v) * s for f, v, s in zip(self.factors, value, self.strides)))

    def decode(self, index: int):
        i = self.index_of(index)
        return tuple(f.decode((i // s) % f.order) for f, s in zip(self.factors, self.strides))

    def parse_literal(self, token: str) -> int:
        t = token.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise LiteralError(token, "product literals look like (<lit>;<lit>;...)")
        try:
            items = _split_top(t[1:-1], ";")
        except ValueError as exc:
            raise LiteralError(token, str(exc)) from None
        if len(items) != len(self.factors):
            raise LiteralError(token, f"expected {len(self.factors)} components, got {len(items)}")
        idx = 0
        for f, item, s in zip(self.factors, items, self.strides):
            idx += f.parse_literal(item) * s
        return idx

    def format(self, index: int) -> str:
        i = self.index_of(index)
        comps = [f.format((i // s) % f.order) for f, s in zip(self.factors, self.strides)]
        return "(" + ";".join(comps) + ")"


class MatrixRing(RingHandle):
    """``M_k(S)``; row-major base-|S| digits, the (0,0) entry most significant."""

    def __init__(self, spec: RingSpec, inner: RingHandle):
        self.k = spec.k
        self.inner = inner
        m = inner.order
        kk = self.k * self.k
        self.place = tuple(m ** (kk - 1 - p) for p in range(kk))
        super().__init__(spec)

    @property
    def is_commutative_kind(self):
        return self.k == 1 and self.inner.is_commutative_kind

    def _entries(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        m = self.inner.order
        return [(xs // p) % m for p in self.place]

    def _join(self, entries):
        out = 0
        for e, p in zip(entries, self.place):
            out = out + np.asarray(e, dtype=np.int64) * p
        return out

    def _vadd(self, xs, ys):
        S = self.inner
        return self._join(S.vadd(a, b) for a, b in zip(self._entries(xs), self._entries(ys)))

    def _vmul(self, xs, ys):
        S, k = self.inner, self.k
        A, B = self._entries(xs), self._entries(ys)
        out = []
        for i in range(k):
            for j in range(k):
                acc = S.vmul(A[i * k], B[j])
                for l in range(1, k):
                    acc = S.vadd(acc, S.vmul(A[i * k + l], B[l * k + j]))
                out.append(acc)
        return self._join(out)

    def _vneg(self, xs):
        S = self.inner
        return self._join(S.neg_table[a] for a in self._entries(xs))

    def _vtranspose(self, xs):
        # conjugate transpose: swap positions and apply the entry involution
        S, k = self.inner, self.k
        A = self._entries(xs)
        return self._join(S.transpose_table[A[j * k + i]] for i in range(k) for j in range(k))

    def _one_value(self):
        S = self.inner
        z, o = S.decode(S.zero), S.decode(S.one)
        return tuple(o if i == j else z for i in range(self.k) for j in range(self.k))

    def encode(self, value) -> int:
        seq = list(value) if isinstance(value, (tuple, list)) else None
        if seq is None:
            raise LiteralError(str(value), "expected a sequence of matrix entries")
        # nested rows are accepted; a list of k*k entries is taken as flat
        if len(seq) == self.k != self.k * self.k or (self.k == 1 and isinstance(seq[0], list)):
            seq = [e for row in seq for e in row]
        if len(seq) != self.k * self.k:
            raise LiteralError(str(value), f"expected {self.k * self.k} entries")
        return int(sum(self.inner.encode(v) * p for v, p in zip(seq, self.place)))

    def decode(self, index: int):
        i = self.index_of(index)
        m = self.inner.order
        return tuple(self.inner.decode((i // p) % m) for p in self.place)

    def parse_literal(self, token: str) -> int:
        try:
            items = _split_top(token.strip(), ",")
        except ValueError as exc:
            raise LiteralError(token, str(exc)) from None
        if len(items) != self.k * self.k:
            raise LiteralError(token, f"expected {self.k * self.k} comma-separated entries (row-major)")
        return int(sum(self.inner.parse_literal(t) * p for t, p in zip(items, self.place)))

    def format(self, index: int) -> str:
        i = self.index_of(index)
        m = self.inner.order
        return ",".join(self.inner.format((i // p) % m) for p in self.place)


def _construct(spec: RingSpec) -> RingHandle:
    if spec.kind == "residue":
        return ResidueRing(spec)
    if spec.kind == "matrix":
        return MatrixRing(spec, _construct(spec.inner))
    return ProductRing(spec, [_construct(p) for p in spec.parts])


def build_ring(
    spec: "RingSpec | str",
    *,
    max_order: int | None = None,
    verify: str = "sample",
) -> RingHandle:
    """Construct a ring from a :class:`RingSpec` or a spec string.

    ``verify`` is ``"sample"`` (default; >= 100 pseudo-random triples),
    ``"full"`` (every triple) or ``"none"``.
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    elif not isinstance(spec, RingSpec):
        raise RingSpecError(f"expected RingSpec or str, got {type(spec).__name__}")
    spec.validated()
    cap = default_max_order() if max_order is None else max_order
    if spec.order > cap:
        raise CardinalityExceeded(spec.order, cap)
    ring = _construct(spec)
    ring.verify_axioms(verify)
    return ring
