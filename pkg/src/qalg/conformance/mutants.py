"""Deliberately broken models, used to show that the suite catches real bugs.

Each mutant differs from its model in one line.  They are reachable from
the CLI under ``mutant:<name>`` tags.
"""

from __future__ import annotations

from ..core import QAInstance, UsageError
from ..instances import DiskInstance, Interval, IntervalInstance, IntervalUnion, RealDisk, UnionInstance, get_instance


class SwappedEndpointInterval(IntervalInstance):
    """Product built from the cross products ``a*d`` and ``b*c`` only."""

    tag = "mutant:iv-swap"

    def mul(self, x, y):
        p, q = x.lo * y.hi, x.hi * y.lo
        return Interval(min(p, q), max(p, q))


class UnmergedUnion(UnionInstance):
    """Sorts components but never merges overlapping or touching ones."""

    tag = "mutant:union-nomerge"

    def normalize(self, pairs):
        if not pairs:
            raise UsageError("an interval union must be nonempty")
        return IntervalUnion._raw(tuple(Interval(a, b) for a, b in sorted(set(pairs))))


class SignErrorDisk(DiskInstance):
    """Product radius uses signed centres where magnitudes belong."""

    tag = "mutant:disk-sign"

    def mul(self, x, y):
        c1, r1, c2, r2 = x.center, x.radius, y.center, y.radius
        return RealDisk(c1 * c2, abs(r1 * r2 + c2 * r1 + c1 * r2))


MUTANTS = {
    m.tag: m for m in (SwappedEndpointInterval(), UnmergedUnion(), SignErrorDisk())
}


def resolve_instance(tag: str, float_tolerance=None) -> QAInstance:
    """Model, mutant or binary64 demo model for ``tag``."""
    if tag in MUTANTS:
        return MUTANTS[tag]
    if tag == "interval:f64":
        from ..instances.float_interval import DEFAULT_TOLERANCE, FloatIntervalInstance
        return FloatIntervalInstance(float_tolerance or DEFAULT_TOLERANCE)
    return get_instance(tag)
