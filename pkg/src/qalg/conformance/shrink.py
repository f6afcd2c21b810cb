"""Greedy counterexample minimisation.

A case is a tuple of slots; each slot is either an element of some model or
a scalar.  A candidate replaces one slot with something strictly simpler
(fewer components first, then smaller numerators and denominators) and is
kept only if the property still fails.
"""

from __future__ import annotations

from typing import Callable, Sequence

from ..core import QAInstance
from ..exact import Q
from ..instances import FuncTuple, Interval, IntervalUnion, Matrix2, MatrixSet, Real, RealDisk
from ..instances._common import scalar_size, shrink_scalar

SCALAR = "scalar"
MAX_STEPS = 4000


def scalars_of(x) -> list:
    if isinstance(x, Interval):
        return [x.lo, x.hi]
    if isinstance(x, IntervalUnion):
        return [v for c in x.components for v in (c.lo, c.hi)]
    if isinstance(x, RealDisk):
        return [x.center, x.radius]
    if isinstance(x, Matrix2):
        return list(x.entries)
    if isinstance(x, MatrixSet):
        return [v for m in x.members for v in m.entries]
    if isinstance(x, FuncTuple):
        return [v for e in x.values for v in scalars_of(e)]
    if isinstance(x, Real):
        return [x.value]
    if isinstance(x, float):
        return [Q(x)]
    if hasattr(x, "lo") and hasattr(x, "hi"):  # binary64 demo intervals
        return [Q(x.lo), Q(x.hi)]
    return [x]


def slot_key(slot, value) -> tuple:
    if slot == SCALAR:
        return (1, scalar_size(value))
    return (slot.complexity(value), sum(scalar_size(v) for v in scalars_of(value)))


def _candidates(slot, value):
    if slot == SCALAR:
        return shrink_scalar(value)
    return slot.shrink(value)


def shrink(slots: Sequence, case: tuple, fails: Callable[[tuple], bool],
           max_steps: int = MAX_STEPS) -> tuple:
    """Locally minimal failing case reachable from ``case``.

    ``fails`` must be deterministic; candidates that raise are skipped.  The
    walk is deterministic, so equal inputs shrink to equal outputs.
    """
    case = tuple(case)
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for i, slot in enumerate(slots):
            key = slot_key(slot, case[i])
            for cand in _candidates(slot, case[i]):
                steps += 1
                if steps >= max_steps:
                    break
                try:
                    if slot_key(slot, cand) >= key:
                        continue
                    trial = case[:i] + (cand,) + case[i + 1:]
                    if fails(trial):
                        case = trial
                        improved = True
                        break
                except Exception:
                    continue
            if improved:
                break
    return case


def case_complexity(slots: Sequence, case: tuple) -> int:
    """Largest component count over the element slots of ``case``."""
    return max(
        (s.complexity(v) for s, v in zip(slots, case) if isinstance(s, QAInstance)),
        default=0,
    )
