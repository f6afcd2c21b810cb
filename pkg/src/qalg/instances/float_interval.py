"""Binary64 intervals compared with an absolute tolerance.

For demonstrations only: rounding makes exact laws fail by an ulp, so the
order and equality here accept errors up to ``tol``.  The conformance path
uses the exact models.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..core import QAInstance, UsageError
from ._common import rand_nonneg, rand_nonzero, rand_scalar

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class FloatInterval:
    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if not self.lo <= self.hi:
            raise UsageError(f"empty interval [{self.lo}, {self.hi}]")

    def __str__(self):
        return f"[{self.lo!r},{self.hi!r}]"


class FloatIntervalInstance(QAInstance):
    tag = "interval:f64"

    def __init__(self, tol: float = DEFAULT_TOLERANCE):
        self.tol = float(tol)
        self._zero = FloatInterval(0.0, 0.0)
        self._one = FloatInterval(1.0, 1.0)

    def accepts(self, x):
        return type(x) is FloatInterval

    @property
    def zero(self):
        return self._zero

    @property
    def identity(self):
        return self._one

    def leq(self, x, y):
        return y.lo - self.tol <= x.lo and x.hi <= y.hi + self.tol

    def equal(self, x, y):
        return abs(x.lo - y.lo) <= self.tol and abs(x.hi - y.hi) <= self.tol

    def add(self, x, y):
        return FloatInterval(x.lo + y.lo, x.hi + y.hi)

    def scale(self, a, x):
        a = float(a)
        p, q = a * x.lo, a * x.hi
        return FloatInterval(min(p, q), max(p, q))

    def mul(self, x, y):
        ps = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
        return FloatInterval(min(ps), max(ps))

    def norm(self, x):
        return max(abs(x.lo), abs(x.hi))

    def excess(self, x, y):
        e = max(0.0, y.lo - x.lo, x.hi - y.hi)
        return 0.0 if e <= self.tol else e

    def ball(self, r):
        return FloatInterval(-float(r), float(r))

    def is_regular(self, x):
        return x.hi - x.lo <= self.tol

    def inverse(self, x):
        if self.is_regular(x) and x.lo != 0:
            return FloatInterval(1 / x.lo, 1 / x.lo)
        return None

    def shrink(self, x):
        for lo, hi in ((0.0, 0.0), (0.0, abs(x.hi)), (float(round(x.lo)), float(round(x.hi))),
                       (x.lo, x.lo), (x.hi, x.hi)):
            if lo <= hi and (lo, hi) != (x.lo, x.hi):
                yield FloatInterval(lo, hi)

    def generate(self, rng: random.Random, size=4):
        a, b = float(rand_scalar(rng)), float(rand_scalar(rng))
        if rng.random() < 0.2:
            b = a
        return FloatInterval(min(a, b), max(a, b))

    def generate_regular(self, rng):
        a = float(rand_scalar(rng))
        return FloatInterval(a, a)

    def generate_above_zero(self, rng, size=2):
        return FloatInterval(-float(rand_nonneg(rng, 16)), float(rand_nonneg(rng, 16)))

    def generate_unit(self, rng):
        a = float(rand_nonzero(rng))
        return FloatInterval(a, a)
