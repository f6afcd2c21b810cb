"""Range enclosures of real polynomials by interval evaluation.

The polynomial is evaluated in power form, ``c0 + c1*t + c2*(t*t) + ...``,
with every power formed as a product of copies of the interval ``t``.  By
inclusion monotonicity of the product and sum, the result contains every
value the polynomial takes on the interval.  Subdividing the domain into
``2^depth`` pieces and taking the hull of the piecewise enclosures tightens
the bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .core import UsageError
from .exact import Q, Scalar
from .instances import INTERVAL, Interval

SAMPLES = 10_000


@dataclass(frozen=True)
class EnclosureResult:
    coeffs: tuple
    domain: Interval
    depth: int
    enclosure: Interval
    sampled_range: Interval

    @property
    def excess_width(self) -> Scalar:
        return self.enclosure.width - self.sampled_range.width

    @property
    def sound(self) -> bool:
        return INTERVAL.leq(self.sampled_range, self.enclosure)


def eval_interval(coeffs, t: Interval) -> Interval:
    """Power-form evaluation of ``sum c_k t^k`` with interval operations."""
    acc = INTERVAL.zero
    power = INTERVAL.identity
    for k, c in enumerate(coeffs):
        if k:
            power = INTERVAL.mul(power, t)
        acc = INTERVAL.add(acc, INTERVAL.scale(c, power))
    return acc


def eval_point(coeffs, t: Scalar) -> Scalar:
    v = mpq(0)
    for c in reversed(coeffs):
        v = v * t + c
    return v


def sampled_range(coeffs, domain: Interval, samples: int = SAMPLES) -> Interval:
    """Hull of the exact values on a grid of ``samples`` equal steps.

    The grid includes both endpoints, so it has ``samples + 1`` points and
    contains the midpoint whenever ``samples`` is even.
    """
    if samples < 1 or domain.is_point:
        v = eval_point(coeffs, domain.lo)
        return Interval(v, v)
    step = domain.width / samples
    vals = [eval_point(coeffs, domain.lo + i * step) for i in range(samples + 1)]
    return Interval(min(vals), max(vals))


def enclose(coeffs, domain: Interval, depth: int = 0, samples: int = SAMPLES) -> EnclosureResult:
    coeffs = tuple(Q(c) for c in coeffs)
    if not coeffs:
        raise UsageError("at least one coefficient is needed")
    if depth < 0:
        raise UsageError("depth must be >= 0")
    pieces = 2 ** depth
    w = domain.width / pieces
    lo = hi = None
    for i in range(pieces):
        part = Interval(domain.lo + i * w, domain.lo + (i + 1) * w)
        e = eval_interval(coeffs, part)
        lo = e.lo if lo is None else min(lo, e.lo)
        hi = e.hi if hi is None else max(hi, e.hi)
    return EnclosureResult(coeffs, domain, depth, Interval(lo, hi),
                           sampled_range(coeffs, domain, samples))
