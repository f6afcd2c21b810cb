"""Finite unions of closed intervals: the computable part of the closed
bounded subsets of the line.

Sums, scalar multiples and products of finite unions are finite unions, so
every operation is exact.  The canonical form keeps components sorted and
separated by a positive gap.
"""

from __future__ import annotations

import bisect
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from ..core import QAInstance, UsageError
from ..exact import ONE, ZERO, Q, Scalar
from ._common import rand_nonzero, rand_scalar
from .interval import (
    Interval,
    IntervalInstance,
    iv_mul,
    iv_scale,
    rand_interval,
    shrink_interval,
)


@dataclass(frozen=True, slots=True)
class IntervalUnion:
    components: tuple

    def __post_init__(self):
        comps = tuple(
            c if type(c) is Interval else Interval(*c) for c in self.components
        )
        object.__setattr__(self, "components", comps)
        if not comps:
            raise UsageError("an interval union must be nonempty")
        for a, b in zip(comps, comps[1:]):
            if not a.hi < b.lo:
                raise UsageError(f"components {a} and {b} are not separated")

    @classmethod
    def _raw(cls, comps: tuple) -> "IntervalUnion":
        # bypasses canonical-form validation; used by normalisers
        u = object.__new__(cls)
        object.__setattr__(u, "components", comps)
        return u

    @classmethod
    def point(cls, a) -> "IntervalUnion":
        return cls((Interval.point(a),))

    @classmethod
    def of(cls, *items) -> "IntervalUnion":
        """Normalised union of intervals, ``(lo, hi)`` pairs or bare points."""
        raw = []
        for it in items:
            if isinstance(it, Interval):
                raw.append((it.lo, it.hi))
            elif isinstance(it, tuple):
                raw.append((Q(it[0]), Q(it[1])))
            else:
                raw.append((Q(it), Q(it)))
        return normalize_union(raw)

    @property
    def lo(self) -> Scalar:
        return self.components[0].lo

    @property
    def hi(self) -> Scalar:
        return self.components[-1].hi

    @property
    def is_point(self) -> bool:
        return len(self.components) == 1 and self.components[0].is_point

    def contains_point(self, t) -> bool:
        comps = self.components
        i = bisect.bisect_right([c.lo for c in comps], t) - 1
        return i >= 0 and t <= comps[i].hi

    def hull(self) -> Interval:
        return Interval(self.lo, self.hi)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self):
        return "u(" + ",".join(str(c) for c in self.components) + ")"


def _pairs(items: Iterable) -> list:
    out = []
    for it in items:
        if isinstance(it, Interval):
            out.append((it.lo, it.hi))
        else:
            lo, hi = it
            if lo > hi:
                raise UsageError(f"empty interval [{lo}, {hi}]")
            out.append((lo, hi))
    return out


def merge_pairs(pairs: list) -> tuple:
    """Sort ``(lo, hi)`` pairs and merge those that overlap or touch."""
    pairs.sort()
    merged = []
    cur_lo, cur_hi = pairs[0]
    for lo, hi in pairs[1:]:
        if lo <= cur_hi:
            if hi > cur_hi:
                cur_hi = hi
        else:
            merged.append(Interval(cur_lo, cur_hi))
            cur_lo, cur_hi = lo, hi
    merged.append(Interval(cur_lo, cur_hi))
    return tuple(merged)


def normalize_union(raw: Iterable) -> IntervalUnion:
    """Canonical union of a nonempty collection of intervals."""
    pairs = _pairs(raw)
    if not pairs:
        raise UsageError("the empty set is not an element of the model")
    return IntervalUnion._raw(merge_pairs(pairs))


def union_mul(x: IntervalUnion, y: IntervalUnion) -> IntervalUnion:
    """Exact pointwise product: the union of all component products."""
    return normalize_union(
        [iv_mul(a.lo, a.hi, b.lo, b.hi) for a in x.components for b in y.components]
    )


def union_add(x: IntervalUnion, y: IntervalUnion) -> IntervalUnion:
    return normalize_union(
        [(a.lo + b.lo, a.hi + b.hi) for a in x.components for b in y.components]
    )


def point_distance(t, x: IntervalUnion) -> Scalar:
    comps = x.components
    los = [c.lo for c in comps]
    i = bisect.bisect_right(los, t) - 1
    best = None
    if i >= 0:
        c = comps[i]
        if t <= c.hi:
            return ZERO
        best = t - c.hi
    if i + 1 < len(comps):
        d = comps[i + 1].lo - t
        best = d if best is None or d < best else best
    return best


def union_excess(x: IntervalUnion, y: IntervalUnion) -> Scalar:
    """``max_{t in x} dist(t, y)``.

    The distance to ``y`` is piecewise linear on each component of ``x``;
    its maxima sit at component endpoints or at midpoints of gaps of ``y``.
    """
    cands = []
    for c in x.components:
        cands.append(c.lo)
        cands.append(c.hi)
    ys = y.components
    for a, b in zip(ys, ys[1:]):
        m = (a.hi + b.lo) / 2
        if x.contains_point(m):
            cands.append(m)
    return max(point_distance(t, y) for t in cands)


def union_contains(big: IntervalUnion, small: IntervalUnion) -> bool:
    comps = big.components
    los = [c.lo for c in comps]
    for s in small.components:
        i = bisect.bisect_right(los, s.lo) - 1
        if i < 0 or s.hi > comps[i].hi:
            return False
    return True


_IV = IntervalInstance()


class UnionInstance(QAInstance):
    """Finite unions of closed intervals ordered by inclusion."""

    tag = "union"

    _zero = IntervalUnion._raw((Interval(ZERO, ZERO),))
    _one = IntervalUnion._raw((Interval(ONE, ONE),))

    def accepts(self, x):
        return type(x) is IntervalUnion

    @property
    def zero(self):
        return self._zero

    @property
    def identity(self):
        return self._one

    def normalize(self, pairs: list) -> IntervalUnion:
        return IntervalUnion._raw(merge_pairs(pairs))

    def leq(self, x, y):
        return union_contains(y, x)

    def add(self, x, y):
        return self.normalize(
            [(a.lo + b.lo, a.hi + b.hi) for a in x.components for b in y.components]
        )

    def scale(self, a, x):
        if a == 0:
            return self._zero
        return self.normalize([iv_scale(a, c.lo, c.hi) for c in x.components])

    def mul(self, x, y):
        return self.normalize(
            [iv_mul(a.lo, a.hi, b.lo, b.hi) for a in x.components for b in y.components]
        )

    def union_with(self, x, y):
        return self.normalize(
            [(c.lo, c.hi) for c in x.components] + [(c.lo, c.hi) for c in y.components]
        )

    def norm(self, x):
        return max(abs(x.components[0].lo), abs(x.components[-1].hi))

    def excess(self, x, y):
        return union_excess(x, y)

    def ball(self, r):
        r = Q(r)
        return IntervalUnion._raw((Interval(-r, r),))

    def inverse(self, x):
        if x.is_point and x.lo != 0:
            return IntervalUnion.point(1 / x.lo)
        return None

    # -- generation ---------------------------------------------------------
    def generate(self, rng: random.Random, size=4):
        k = rng.randint(1, max(1, size))
        return self.normalize(
            [(c.lo, c.hi) for c in (rand_interval(rng, 0.35) for _ in range(k))]
        )

    def generate_regular(self, rng):
        return IntervalUnion._raw((Interval.point(rand_scalar(rng)),))

    def generate_symmetric(self, rng, size=4):
        x = self.generate(rng, max(1, size // 2))
        return self.union_with(x, self.scale(-ONE, x))

    def generate_above_zero(self, rng, size=2):
        g = self.generate(rng, size)
        if rng.random() < 0.5:
            return self.union_with(g, self._zero)
        return self.add(g, self.scale(-ONE, g))

    def generate_above(self, x, rng):
        y = self.add(x, self.generate_above_zero(rng, 1))
        if rng.random() < 0.4:
            y = self.union_with(y, self.generate(rng, 1))
        return y

    def generate_below(self, x, rng):
        comps = [c for c in x.components if rng.random() < 0.6] or [x.components[0]]
        subs = (_IV.generate_below(c, rng) for c in comps)
        return self.normalize([(s.lo, s.hi) for s in subs])

    def generate_unit(self, rng):
        return IntervalUnion._raw((Interval.point(rand_nonzero(rng)),))

    def shrink(self, x) -> Iterator[IntervalUnion]:
        comps = x.components
        if len(comps) > 1:
            for i in range(len(comps)):
                yield self.normalize([(c.lo, c.hi) for j, c in enumerate(comps) if j != i])
        for i, c in enumerate(comps):
            for s in shrink_interval(c):
                rest = [(d.lo, d.hi) for j, d in enumerate(comps) if j != i]
                yield self.normalize(rest + [(s.lo, s.hi)])

    def complexity(self, x):
        return len(x.components)

    def compact_chain(self, x, n):
        # finite point sets stay point sets along the chain and their point
        # count grows geometrically; keep those links as signed sumsets
        if len(x.components) < 2 or not all(c.is_point for c in x.components):
            return None
        from ..core import ChainReport
        from .sumset import PointSumset, copies_after

        prev = PointSumset.of_union(x)
        links, strict = [], []
        for i in range(1, n + 1):
            link = PointSumset(prev.points, copies_after(i))
            strict.append(prev.strictly_below(link))
            links.append(link)
            prev = link
        return ChainReport(start=x, links=tuple(links), strict=tuple(strict))

