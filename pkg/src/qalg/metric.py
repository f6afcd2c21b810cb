"""Norms, directed excess and the Hausdorff metric.

``hausdorff`` is the closed form ``max(excess(x, y), excess(y, x))``.
``hausdorff_oracle`` evaluates the infimum definition directly: it searches
a grid of radii for perturbations ``a1, a2`` with ``x <= y + a1``,
``y <= x + a2`` and ``||a_i|| <= r``, using only the model's order, sum and
norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from gmpy2 import mpq

from .core import QAInstance, Unsupported, UsageError, _check
from .exact import Q, Scalar, le_sum

DEFAULT_RESOLUTION = mpq(1, 64)


def norm(inst: QAInstance, x):
    _check(inst, x)
    return inst.norm(x)


def excess(inst: QAInstance, x, y):
    """Least ``r`` such that ``x <= y + ball(r)``."""
    _check(inst, x, y)
    return inst.excess(x, y)


def hausdorff(inst: QAInstance, x, y):
    _check(inst, x, y)
    return max(inst.excess(x, y), inst.excess(y, x))


@dataclass(frozen=True)
class MetricWitness:
    """Perturbations certifying ``hausdorff(x, y) <= r``."""

    a1: Any
    a2: Any
    r: Scalar

    def certifies(self, inst: QAInstance, x, y) -> bool:
        return (
            self.r >= 0
            and inst.leq(x, inst.add(y, self.a1))
            and inst.leq(y, inst.add(x, self.a2))
            and inst.norm(self.a1) <= self.r
            and inst.norm(self.a2) <= self.r
        )


def difference_witness(inst: QAInstance, x, y):
    """A perturbation ``a`` with ``x <= y + a`` that does not depend on a radius.

    Matrix sets use the nearest-member differences ``{x_i - y_j(i)}``; the
    other models use ``x - y``.
    """
    from .instances import FuncInstance, FuncTuple, MatrixSet, MatrixSetInstance
    from .instances.matrix import mat_add, mat_scale, mat_sub_frob_sq

    if isinstance(inst, MatrixSetInstance):
        diffs = []
        for a in x.members:
            b = min(y.members, key=lambda m: mat_sub_frob_sq(a, m))
            diffs.append(mat_add(a, mat_scale(-1, b)))
        return MatrixSet._raw(diffs)
    if isinstance(inst, FuncInstance):
        return FuncTuple(tuple(
            difference_witness(inst.base, u, v) for u, v in zip(x.values, y.values)
        ))
    return inst.add(x, inst.scale(mpq(-1), y))


def _one_side(inst: QAInstance, x, y, r, diff):
    """A perturbation of norm <= r lifting y above x, or None."""
    try:
        ball = inst.ball(r)
    except Unsupported:
        ball = None
    if ball is not None and inst.norm(ball) <= r and inst.leq(x, inst.add(y, ball)):
        return ball
    if inst.norm(diff) <= r and inst.leq(x, inst.add(y, diff)):
        return diff
    return None


def hausdorff_oracle(inst: QAInstance, x, y, resolution=DEFAULT_RESOLUTION):
    """Least grid radius ``k * resolution`` admitting a :class:`MetricWitness`.

    Returns ``(r, witness)``.  The true distance lies in
    ``(r - resolution, r]``.
    """
    _check(inst, x, y)
    resolution = Q(resolution)
    if resolution <= 0:
        raise UsageError("resolution must be positive")
    d1 = difference_witness(inst, x, y)
    d2 = difference_witness(inst, y, x)

    def attempt(k):
        r = resolution * k
        a1 = _one_side(inst, x, y, r, d1)
        if a1 is None:
            return None
        a2 = _one_side(inst, y, x, r, d2)
        if a2 is None:
            return None
        return MetricWitness(a1, a2, r)

    w = attempt(0)
    if w is not None:
        return w.r, w
    # the difference witnesses always succeed at their own norm, which bounds the search
    lo, hi = 0, 1
    while attempt(hi) is None:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if attempt(mid) is None:
            lo = mid
        else:
            hi = mid
    w = attempt(hi)
    return w.r, w


def within(a, b, tol) -> bool:
    """Exact ``|a - b| <= tol`` for non-negative magnitudes."""
    tol = Q(tol)
    return le_sum(a, [b, tol]) and le_sum(b, [a, tol])
