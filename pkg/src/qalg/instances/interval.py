"""Compact intervals of the real line with Minkowski operations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from gmpy2 import mpq

from ..core import QAInstance, UsageError
from ..exact import ONE, ZERO, Q, Scalar, fmt_scalar
from ._common import rand_nonneg, rand_nonzero, rand_scalar, shrink_scalar


@dataclass(frozen=True, slots=True)
class Interval:
    lo: Scalar
    hi: Scalar

    def __post_init__(self):
        if type(self.lo) is not Scalar:
            object.__setattr__(self, "lo", Q(self.lo))
        if type(self.hi) is not Scalar:
            object.__setattr__(self, "hi", Q(self.hi))
        if self.lo > self.hi:
            raise UsageError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, a) -> "Interval":
        a = Q(a)
        return cls(a, a)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Scalar:
        return self.hi - self.lo

    @property
    def mid(self) -> Scalar:
        return (self.lo + self.hi) / 2

    def contains_point(self, t) -> bool:
        return self.lo <= t <= self.hi

    def __str__(self):
        if self.lo == self.hi:
            return "{" + fmt_scalar(self.lo) + "}"
        return f"[{fmt_scalar(self.lo)},{fmt_scalar(self.hi)}]"


def iv_mul(a, b, c, d) -> tuple:
    """Endpoints of ``[a,b]*[c,d]``."""
    p1, p2, p3, p4 = a * c, a * d, b * c, b * d
    return min(p1, p2, p3, p4), max(p1, p2, p3, p4)


def iv_scale(k, a, b) -> tuple:
    if k >= 0:
        return k * a, k * b
    return k * b, k * a


def rand_interval(rng: random.Random, point_prob: float = 0.2) -> Interval:
    a = rand_scalar(rng)
    if rng.random() < point_prob:
        return Interval(a, a)
    b = rand_scalar(rng)
    return Interval(min(a, b), max(a, b))


def shrink_interval(x: Interval) -> Iterator[Interval]:
    if not x.is_point:
        yield Interval(x.lo, x.lo)
        yield Interval(x.hi, x.hi)
    for s in shrink_scalar(x.lo):
        if s <= x.hi:
            yield Interval(s, x.hi)
    for s in shrink_scalar(x.hi):
        if s >= x.lo:
            yield Interval(x.lo, s)
    # move the whole interval toward the origin keeping its width
    for s in shrink_scalar(x.lo):
        yield Interval(s, s + x.width)


class IntervalInstance(QAInstance):
    """Nonempty compact convex subsets of the line, ordered by inclusion."""

    tag = "interval"

    _zero = Interval(ZERO, ZERO)
    _one = Interval(ONE, ONE)

    def accepts(self, x):
        return type(x) is Interval

    @property
    def zero(self):
        return self._zero

    @property
    def identity(self):
        return self._one

    def leq(self, x, y):
        return y.lo <= x.lo and x.hi <= y.hi

    def add(self, x, y):
        return Interval(x.lo + y.lo, x.hi + y.hi)

    def scale(self, a, x):
        return Interval(*iv_scale(a, x.lo, x.hi))

    def mul(self, x, y):
        return Interval(*iv_mul(x.lo, x.hi, y.lo, y.hi))

    def norm(self, x):
        return max(abs(x.lo), abs(x.hi))

    def excess(self, x, y):
        return max(ZERO, y.lo - x.lo, x.hi - y.hi)

    def ball(self, r):
        r = Q(r)
        return Interval(-r, r)

    def inverse(self, x):
        if x.is_point and x.lo != 0:
            return Interval.point(1 / x.lo)
        return None

    def generate(self, rng, size=4):
        if size <= 1:
            return Interval.point(rand_scalar(rng))
        return rand_interval(rng)

    def generate_regular(self, rng):
        return Interval.point(rand_scalar(rng))

    def generate_symmetric(self, rng, size=4):
        a = rand_nonneg(rng)
        return Interval(-a, a)

    def generate_above_zero(self, rng, size=2):
        return Interval(-rand_nonneg(rng, 16), rand_nonneg(rng, 16))

    def generate_below(self, x, rng):
        a = x.lo + x.width * mpq(rng.randint(0, 8), 8)
        b = a + (x.hi - a) * mpq(rng.randint(0, 8), 8)
        return Interval(a, b)

    def generate_unit(self, rng):
        return Interval.point(rand_nonzero(rng))

    def shrink(self, x):
        return shrink_interval(x)
