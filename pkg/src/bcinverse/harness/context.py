"""Evaluation contexts for theorem checkers.

Checkers are written against a small set of primitives (products, ideals,
annihilators, inverse lookups).  :class:`Context` answers each primitive by
calling the public engine and ideal functions directly; it is what failure
replay uses.  :class:`CachedContext` precomputes the same answers for a
whole ring with vectorised table scans so that exhaustive sweeps are fast.
The two are independent code paths over the same definitions.
"""

from __future__ import annotations

import numpy as np

from .. import ideals, inverses
from ..ideals import Subset
from ..rings import RingHandle


class Context:
    def __init__(self, ring: RingHandle):
        self.ring = ring
        self.n = ring.order
        self.one = ring.one
        self.zero = ring.zero

    # -- arithmetic ---------------------------------------------------------
    def mul(self, x: int, y: int) -> int:
        return self.ring.mul(x, y)

    def prod(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul(acc, x)
        return acc

    def add(self, x: int, y: int) -> int:
        return self.ring.add(x, y)

    def sub(self, x: int, y: int) -> int:
        return self.ring.sub(x, y)

    def transpose(self, x: int) -> int:
        return self.ring.transpose(x)

    def plus_one_minus(self, x: int, e: int) -> int:
        """``x + 1 - e``."""
        return self.sub(self.add(x, self.one), e)

    def unit_inv(self, x: int) -> int | None:
        return self.ring.unit_inverse(x) if self.ring.is_unit(x) else None

    def is_unit(self, x: int) -> bool:
        return self.ring.is_unit(x)

    def is_idempotent(self, x: int) -> bool:
        return self.ring.is_idempotent(x)

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def idempotents(self) -> tuple[int, ...]:
        return self.ring.idempotents

    # -- regularity ---------------------------------------------------------
    def inner(self, x: int) -> list[int]:
        return inverses.inner_inverses(self.ring, x).indices()

    def is_regular(self, x: int) -> bool:
        return inverses.is_regular(self.ring, x)

    # -- ideals -------------------------------------------------------------
    def right_ideal(self, x: int) -> Subset:
        return ideals.right_ideal(self.ring, x)

    def left_ideal(self, x: int) -> Subset:
        return ideals.left_ideal(self.ring, x)

    def r_ann(self, x: int) -> Subset:
        return ideals.right_annihilator(self.ring, x)

    def l_ann(self, x: int) -> Subset:
        return ideals.left_annihilator(self.ring, x)

    def rl(self, x: int) -> Subset:
        return ideals.double_annihilators(self.ring, x)[0]

    def lr(self, x: int) -> Subset:
        return ideals.double_annihilators(self.ring, x)[1]

    def direct_sum(self, s: Subset, t: Subset) -> bool:
        return ideals.is_direct_sum_of_ring(s, t)

    # -- inverses -----------------------------------------------------------
    def acceptors(self, kind: str, a: int, b: int, c: int) -> tuple[int, ...]:
        fn = {
            "bc": inverses.bc_acceptors,
            "lemma": inverses.lemma_acceptors,
            "hybrid": inverses.hybrid_acceptors,
            "annihilator": inverses.annihilator_acceptors,
        }[kind]
        return tuple(fn(self.ring, a, b, c))

    def bc(self, a: int, b: int, c: int) -> int | None:
        found = self.acceptors("bc", a, b, c)
        return found[0] if found else None

    def bc_ideal_test(self, a: int, b: int, c: int) -> bool:
        return inverses.bc_exists_via_ideals(self.ring, a, b, c)

    def group(self, a: int) -> int | None:
        return inverses.group_inverse(self.ring, a).index

    def drazin(self, a: int) -> tuple[int, int]:
        r = inverses.drazin_inverse(self.ring, a)
        return r.index, r.drazin_index

    def bott_duffin(self, a: int, e: int, f: int) -> int | None:
        return inverses.bott_duffin(self.ring, a, e, f, cross_check=False).index

    def image_kernel(self, a: int, p: int, q: int) -> int | None:
        return inverses.image_kernel_inverse(self.ring, a, p, q).index

    def moore_penrose(self, a: int) -> list[int]:
        return [x for x in range(self.n) if inverses.is_moore_penrose(self.ring, a, x)]


def _labels(rows: np.ndarray) -> np.ndarray:
    _, inv = np.unique(rows, axis=0, return_inverse=True)
    return inv.ravel()


class CachedContext(Context):
    """Whole-ring precomputation from the multiplication table.

    Every cache is filled in the constructor or is a pure memo, so one
    instance can be shared by worker threads.
    """

    def __init__(self, ring: RingHandle):
        super().__init__(ring)
        n = self.n
        M = np.asarray(ring.mul_table, dtype=np.int64)
        ys = np.arange(n)
        self._M = M
        self._mul = M.tolist()
        self._add = np.asarray(ring.add_table).tolist()
        self._neg = [int(v) for v in ring.neg_table]
        self._tr = [int(v) for v in ring.transpose_table]
        self._uinv = [None if v < 0 else int(v) for v in ring._unit_inverses]
        self._idem = tuple(int(x) for x in np.flatnonzero(M[ys, ys] == ys))

        rows = ys[:, None]
        RI = np.zeros((n, n), dtype=bool)
        RI[rows, M] = True
        LI = np.zeros((n, n), dtype=bool)
        LI[rows, M.T] = True
        RA = M == 0
        LA = M.T == 0
        RL = np.array([np.all(RA[LA[x]], axis=0) for x in range(n)])
        LR = np.array([np.all(LA[RA[x]], axis=0) for x in range(n)])
        self._RI, self._LI, self._RA, self._LA = RI, LI, RA, LA
        self._rid, self._lid = _labels(RI), _labels(LI)
        self._ran, self._lan = _labels(RA), _labels(LA)
        self._sets = {
            name: [Subset(ring, m[x]) for x in range(n)]
            for name, m in (("RI", RI), ("LI", LI), ("RA", RA), ("LA", LA), ("RL", RL), ("LR", LR))
        }

        inner = M[M, ys[:, None]]  # inner[a, x] = (a x) a
        self._inner = [[int(x) for x in np.flatnonzero(inner[a] == a)] for a in range(n)]
        self._regular = [bool(v) for v in self._inner]

        # outer[a, y]  <=>  y a y = y
        self._outer = M[M.T, ys[None, :]] == ys[None, :]

        self._bc_scan(M, ys, RI, LI)
        self._memo: dict = {}

    def _bc_scan(self, M, ys, RI, LI) -> None:
        """Definition scan of every triple, vectorised over (a, y) per (b, c)."""
        n = self.n
        in_bRy = np.array([(M[RI[b]] == ys[None, :]).any(axis=0) for b in range(n)])
        in_yRc = np.array([(M[:, LI[c]] == ys[:, None]).any(axis=1) for c in range(n)])
        yab = [M[M, b].T == b for b in range(n)]  # [a, y]: (y a) b == b
        cay = [M[c][M] == c for c in range(n)]  # [a, y]: c (a y) == c
        table = np.full((n, n, n), -1, dtype=np.int64)
        count = np.zeros((n, n, n), dtype=np.int64)
        for b in range(n):
            left = yab[b] & in_bRy[b][None, :]
            for c in range(n):
                acc = left & cay[c] & in_yRc[c][None, :]
                cnt = acc.sum(axis=1)
                count[:, b, c] = cnt
                table[:, b, c] = np.where(cnt > 0, acc.argmax(axis=1), -1)
        self._bc_table = table
        self._bc_count = count

    # -- arithmetic ---------------------------------------------------------
    def mul(self, x, y):
        return self._mul[x][y]

    def prod(self, *xs):
        m = self._mul
        acc = xs[0]
        for x in xs[1:]:
            acc = m[acc][x]
        return acc

    def add(self, x, y):
        return self._add[x][y]

    def sub(self, x, y):
        return self._add[x][self._neg[y]]

    def transpose(self, x):
        return self._tr[x]

    def unit_inv(self, x):
        return self._uinv[x]

    def is_unit(self, x):
        return self._uinv[x] is not None

    def is_idempotent(self, x):
        return self._mul[x][x] == x

    @property
    def idempotents(self):
        return self._idem

    def inner(self, x):
        return self._inner[x]

    def is_regular(self, x):
        return self._regular[x]

    # -- ideals -------------------------------------------------------------
    def right_ideal(self, x):
        return self._sets["RI"][x]

    def left_ideal(self, x):
        return self._sets["LI"][x]

    def r_ann(self, x):
        return self._sets["RA"][x]

    def l_ann(self, x):
        return self._sets["LA"][x]

    def rl(self, x):
        return self._sets["RL"][x]

    def lr(self, x):
        return self._sets["LR"][x]

    def direct_sum(self, s, t):
        key = ("dsum", s.key, t.key)
        if key not in self._memo:
            self._memo[key] = ideals.is_direct_sum_of_ring(s, t)
        return self._memo[key]

    # -- inverses -----------------------------------------------------------
    def acceptors(self, kind, a, b, c):
        key = (kind, a, b, c)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if kind == "bc":
            if self._bc_count[a, b, c] > 1:
                # rare and only on a bug: fall back to the literal scan for the full list
                out = tuple(inverses.bc_acceptors(self.ring, a, b, c))
            else:
                y = int(self._bc_table[a, b, c])
                out = () if y < 0 else (y,)
        else:
            mask = self._outer[a].copy()
            if kind == "lemma":
                mask &= (self._rid == self._rid[b]) & (self._lid == self._lid[c])
            elif kind == "hybrid":
                mask &= (self._rid == self._rid[b]) & (self._ran == self._ran[c])
            elif kind == "annihilator":
                mask &= (self._lan == self._lan[b]) & (self._ran == self._ran[c])
            else:
                raise KeyError(kind)
            out = tuple(int(y) for y in np.flatnonzero(mask))
        self._memo[key] = out
        return out

    def bc(self, a, b, c):
        y = int(self._bc_table[a, b, c])
        return None if y < 0 else y

    def bc_count(self, a, b, c) -> int:
        return int(self._bc_count[a, b, c])

    def bc_ideal_test(self, a, b, c):
        t = self.prod(c, a, b)
        return self._lid[b] == self._lid[t] and self._rid[c] == self._rid[t]

    def invertible_triples(self) -> dict[tuple[int, int], list[int]]:
        """(b, c) -> sorted list of a having a (b,c)-inverse."""
        key = ("invertible",)
        if key not in self._memo:
            found = self._bc_table >= 0
            self._memo[key] = {
                (b, c): [int(a) for a in np.flatnonzero(found[:, b, c])]
                for b in range(self.n)
                for c in range(self.n)
            }
        return self._memo[key]

    def _memoised(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def group(self, a):
        return self._memoised(("group", a), lambda: Context.group(self, a))

    def drazin(self, a):
        return self._memoised(("drazin", a), lambda: Context.drazin(self, a))

    def bott_duffin(self, a, e, f):
        return self._memoised(("bd", a, e, f), lambda: Context.bott_duffin(self, a, e, f))

    def image_kernel(self, a, p, q):
        return self._memoised(("ik", a, p, q), lambda: Context.image_kernel(self, a, p, q))

    def moore_penrose(self, a):
        def scan():
            M, tr = self._M, np.asarray(self._tr)
            xs = np.arange(self.n)
            ax, xa = M[a], M[:, a]
            ok = (M[ax, a] == a) & (M[xa, xs] == xs) & (tr[ax] == ax) & (tr[xa] == xa)
            return [int(x) for x in np.flatnonzero(ok)]

        return self._memoised(("mp", a), scan)
