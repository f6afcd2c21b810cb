"""Signed sumsets of a finite point set, in closed form.

For a finite set ``x = {p_1, ..., p_k}`` the Minkowski sum of ``P`` copies
of ``x`` and ``P - 1`` copies of ``-x`` is

    { sum e_i p_i : e in Z^k, sum e_i = 1, sum max(e_i, 0) <= P }.

The chain ``x -> x + x - x`` starting from such a set stays inside this
family (``P`` goes ``1, 2, 5, 14, ...``), while the number of points can
grow like ``3^n`` times the spread of ``x`` measured in its lattice step.
Materialising ten links is out of reach in general, so chain links of point
sets are kept in this form.  Membership answers come with an integer
certificate ``e`` that is re-checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm
from typing import Optional

from gmpy2 import mpq

from ..core import Unsupported, UsageError
from ..exact import Q, Scalar, fmt_scalar
from .union import IntervalUnion, merge_pairs

#: Largest point count :meth:`PointSumset.materialize` will build.
MATERIALIZE_LIMIT = 20000


def copies_after(n: int) -> int:
    """``P`` for the ``n``-th link: ``P_0 = 1`` and ``P_{n+1} = 3 P_n - 1``."""
    return (3 ** n + 1) // 2


@dataclass(frozen=True)
class PointSumset:
    points: tuple
    copies: int

    def __post_init__(self):
        pts = tuple(sorted({Q(p) for p in self.points}))
        if not pts:
            raise UsageError("a sumset needs at least one point")
        if self.copies < 1:
            raise UsageError("copies must be at least 1")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of_union(cls, x: IntervalUnion, copies: int = 1) -> "PointSumset":
        if not all(c.is_point for c in x.components):
            raise UsageError(f"{x} is not a finite point set")
        return cls(tuple(c.lo for c in x.components), copies)

    # -- extremes ------------------------------------------------------------
    @property
    def lo(self) -> Scalar:
        a, b = self.points[0], self.points[-1]
        return self.copies * a - (self.copies - 1) * b

    @property
    def hi(self) -> Scalar:
        a, b = self.points[0], self.points[-1]
        return self.copies * b - (self.copies - 1) * a

    # -- certificates --------------------------------------------------------
    def certifies(self, lam, e) -> bool:
        """Exact check that the integer vector ``e`` places ``lam`` in the set."""
        if len(e) != len(self.points) or sum(e) != 1:
            return False
        if sum(v for v in e if v > 0) > self.copies:
            return False
        return sum(v * p for v, p in zip(e, self.points)) == Q(lam)

    def _lattice(self):
        """Reference point, step and integer offsets of the points."""
        p0 = self.points[0]
        diffs = [p - p0 for p in self.points[1:]]
        den = reduce(lcm, (int(d.denominator) for d in diffs), 1)
        ints = [int(d * den) for d in diffs]
        g = reduce(gcd, ints, 0)
        return p0, mpq(g, den), [m // g for m in ints]

    def certificate(self, lam) -> Optional[tuple]:
        """An integer vector witnessing ``lam`` in the set, or ``None``."""
        lam = Q(lam)
        k = len(self.points)
        if lam in self.points:
            i = self.points.index(lam)
            return tuple(1 if j == i else 0 for j in range(k))
        if k == 1 or not self.lo <= lam <= self.hi:
            return None
        p0, step, m = self._lattice()
        t = (lam - p0) / step
        if t.denominator != 1:
            return None
        t = int(t)
        if k == 2:
            e = (1 - t, t)
        elif k == 3:
            e = _best_three(m[0], m[1], t)
        else:
            raise Unsupported("membership of arbitrary points is only decided for up to 3 points")
        return e if self.certifies(lam, e) else None

    def contains(self, lam) -> bool:
        return self.certificate(lam) is not None

    # -- order between links ---------------------------------------------------
    def issubset(self, other: "PointSumset") -> bool:
        """Decided for sumsets of the same base set: more copies give a larger set.

        A certificate for ``P`` copies is also one for any ``P' >= P``.
        """
        if self.points != other.points:
            raise Unsupported("only sumsets of one base set are compared")
        return self.copies <= other.copies

    def strictly_below(self, other: "PointSumset") -> bool:
        # the larger set reaches a point beyond this set's maximum
        return self.issubset(other) and other.hi > self.hi

    # -- materialisation -----------------------------------------------------
    def size_bound(self) -> int:
        _, step, _ = self._lattice() if len(self.points) > 1 else (0, 1, [])
        if len(self.points) == 1:
            return 1
        return int((self.hi - self.lo) / step) + 1

    def materialize(self, limit: int = MATERIALIZE_LIMIT) -> IntervalUnion:
        """The set as a canonical union of points, by repeated Minkowski sums."""
        if self.size_bound() > limit:
            raise Unsupported(f"sumset has up to {self.size_bound()} points (limit {limit})")
        base = set(self.points)
        neg = {-p for p in base}
        acc = set(base)
        for _ in range(self.copies - 1):
            acc = {a + b for a in acc for b in base}
            acc = {a + b for a in acc for b in neg}
        return IntervalUnion._raw(merge_pairs([(p, p) for p in acc]))

    def __str__(self):
        try:
            if self.size_bound() <= 64:
                return str(self.materialize())
        except Unsupported:
            pass
        x = ",".join("{" + fmt_scalar(p) + "}" for p in self.points)
        return f"sumset({self.copies},u({x}))"


def _best_three(m2: int, m3: int, t: int) -> tuple:
    """Integer ``(e1, e2, e3)`` with ``e2 m2 + e3 m3 = t``, ``sum e = 1`` and least positive mass."""
    g, a, b = _egcd(m2, m3)
    if t % g:
        return (0, 0, 0)
    e2, e3 = a * (t // g), b * (t // g)
    s2, s3 = m3 // g, m2 // g

    def at(s):
        u, v = e2 + s * s2, e3 - s * s3
        return (1 - u - v, u, v)

    def mass(s):
        return sum(max(c, 0) for c in at(s))

    # positive mass is (|e|_1 + 1) / 2, convex along the solution line; beyond
    # |s| = 3(|e2| + |e3|) + 3 it exceeds the mass at s = 0
    hi = 3 * (abs(e2) + abs(e3)) + 3
    lo = -hi
    while hi - lo > 2:
        m1 = lo + (hi - lo) // 3
        m2_ = hi - (hi - lo) // 3
        if mass(m1) <= mass(m2_):
            hi = m2_
        else:
            lo = m1
    return min((at(s) for s in range(lo, hi + 1)), key=lambda e: sum(max(c, 0) for c in e))


def _egcd(a: int, b: int):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y
