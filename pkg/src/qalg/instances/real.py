"""The real field as a degenerate quasi-algebra: the order is equality."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import QAInstance, Unsupported
from ..exact import ONE, ZERO, Q, Scalar, fmt_scalar
from ._common import rand_nonzero, rand_scalar, shrink_scalar


@dataclass(frozen=True, slots=True)
class Real:
    value: Scalar

    def __post_init__(self):
        if type(self.value) is not Scalar:
            object.__setattr__(self, "value", Q(self.value))

    def __str__(self):
        return f"r({fmt_scalar(self.value)})"


class RealInstance(QAInstance):
    tag = "real"
    is_set_model = False

    _zero = Real(ZERO)
    _one = Real(ONE)

    def accepts(self, x):
        return type(x) is Real

    @property
    def zero(self):
        return self._zero

    @property
    def identity(self):
        return self._one

    def leq(self, x, y):
        return x.value == y.value

    def add(self, x, y):
        return Real(x.value + y.value)

    def scale(self, a, x):
        return Real(a * x.value)

    def mul(self, x, y):
        return Real(x.value * y.value)

    def norm(self, x):
        return abs(x.value)

    def excess(self, x, y):
        # x <= y + a forces a = x - y
        return abs(x.value - y.value)

    def ball(self, r):
        raise Unsupported("the real model has no symmetric ball: its order is equality")

    def unit_ball(self):
        return self.ball(ONE)

    def inverse(self, x):
        return Real(1 / x.value) if x.value != 0 else None

    def generate(self, rng, size=4):
        return Real(rand_scalar(rng))

    def generate_regular(self, rng):
        return Real(rand_scalar(rng))

    def generate_symmetric(self, rng, size=4):
        return self._zero

    def generate_above_zero(self, rng, size=2):
        return self._zero

    def generate_above(self, x, rng):
        return x

    def generate_unit(self, rng):
        return Real(rand_nonzero(rng))

    def shrink(self, x):
        for s in shrink_scalar(x.value):
            yield Real(s)
