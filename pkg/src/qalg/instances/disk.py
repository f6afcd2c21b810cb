"""Closed complex disks centred on the real axis, with centred-form product.

The exact pointwise product of two offset disks is not a disk.  The product
used here is the smallest disk about ``c1*c2`` containing it, which keeps
the carrier closed and satisfies every quasi-algebra axiom.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from ..core import QAInstance, UsageError
from ..exact import ONE, ZERO, Q, Scalar, fmt_scalar
from ._common import rand_nonneg, rand_nonzero, rand_scalar, shrink_scalar


@dataclass(frozen=True, slots=True)
class RealDisk:
    center: Scalar
    radius: Scalar

    def __post_init__(self):
        if type(self.center) is not Scalar:
            object.__setattr__(self, "center", Q(self.center))
        if type(self.radius) is not Scalar:
            object.__setattr__(self, "radius", Q(self.radius))
        if self.radius < 0:
            raise UsageError(f"disk radius must be non-negative, got {self.radius}")

    def real_section(self) -> tuple:
        """Endpoints of the disk's intersection with the real axis."""
        return self.center - self.radius, self.center + self.radius

    def __str__(self):
        return f"d({fmt_scalar(self.center)},{fmt_scalar(self.radius)})"


def disk_mul(x: RealDisk, y: RealDisk) -> RealDisk:
    c1, r1, c2, r2 = x.center, x.radius, y.center, y.radius
    return RealDisk(c1 * c2, r1 * r2 + abs(c2) * r1 + abs(c1) * r2)


def disk_contains(big: RealDisk, small: RealDisk) -> bool:
    return abs(small.center - big.center) <= big.radius - small.radius


class DiskInstance(QAInstance):
    tag = "disk"

    _zero = RealDisk(ZERO, ZERO)
    _one = RealDisk(ONE, ZERO)

    def accepts(self, x):
        return type(x) is RealDisk

    @property
    def zero(self):
        return self._zero

    @property
    def identity(self):
        return self._one

    def leq(self, x, y):
        return disk_contains(y, x)

    def add(self, x, y):
        return RealDisk(x.center + y.center, x.radius + y.radius)

    def scale(self, a, x):
        return RealDisk(a * x.center, abs(a) * x.radius)

    def mul(self, x, y):
        return disk_mul(x, y)

    def norm(self, x):
        return abs(x.center) + x.radius

    def excess(self, x, y):
        return max(ZERO, abs(x.center - y.center) + x.radius - y.radius)

    def ball(self, r):
        return RealDisk(ZERO, Q(r))

    def inverse(self, x):
        if x.radius == 0 and x.center != 0:
            return RealDisk(1 / x.center, ZERO)
        return None

    def generate(self, rng, size=4):
        c = rand_scalar(rng)
        if size <= 1 or rng.random() < 0.2:
            return RealDisk(c, ZERO)
        return RealDisk(c, rand_nonneg(rng))

    def generate_regular(self, rng):
        return RealDisk(rand_scalar(rng), ZERO)

    def generate_symmetric(self, rng, size=4):
        return RealDisk(ZERO, rand_nonneg(rng))

    def generate_above_zero(self, rng, size=2):
        r = rand_nonneg(rng, 16)
        return RealDisk(r * mpq(rng.randint(-4, 4), 4), r)

    def generate_below(self, x, rng):
        r = x.radius * mpq(rng.randint(0, 4), 4)
        slack = x.radius - r
        return RealDisk(x.center + slack * mpq(rng.randint(-4, 4), 4), r)

    def generate_unit(self, rng):
        return RealDisk(rand_nonzero(rng), ZERO)

    def shrink(self, x):
        if x.radius:
            yield RealDisk(x.center, ZERO)
        for c in shrink_scalar(x.center):
            yield RealDisk(c, x.radius)
        for r in shrink_scalar(x.radius):
            if r >= 0:
                yield RealDisk(x.center, r)
