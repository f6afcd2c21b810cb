"""Concrete quasi-algebra models and the tag registry."""

from __future__ import annotations

from ..core import QAInstance, UsageError
from .disk import DiskInstance, RealDisk, disk_mul
from .functions import FuncInstance, FuncTuple
from .interval import Interval, IntervalInstance
from .matrix import IDENTITY2, ZERO2, Matrix2, MatrixSet, MatrixSetInstance, matrixset_mul
from .real import Real, RealInstance
from .union import IntervalUnion, UnionInstance, normalize_union, union_mul

INTERVAL = IntervalInstance()
UNION = UnionInstance()
DISK = DiskInstance()
MATRIX = MatrixSetInstance()
REAL = RealInstance()
FUNC = FuncInstance(INTERVAL, 3)

_SIMPLE = {i.tag: i for i in (INTERVAL, UNION, DISK, MATRIX, REAL)}

#: The models exercised by the conformance suite by default.
DEFAULT_TAGS = ("interval", "union", "disk", "matrix", "func", "real")


def get_instance(tag: str) -> QAInstance:
    """Look up a model by tag.

    ``func`` is the pointwise model over intervals on three points;
    ``func:<base>:<n>`` selects another base and index size.
    """
    if tag in _SIMPLE:
        return _SIMPLE[tag]
    if tag == "func":
        return FUNC
    if tag.startswith("func:"):
        parts = tag.split(":")
        if len(parts) == 3 and parts[2].isdigit():
            return FuncInstance(get_instance(parts[1]), int(parts[2]))
    raise UsageError(f"unknown instance tag {tag!r}")


def instance_of(x) -> QAInstance:
    """The model an element belongs to."""
    for inst in _SIMPLE.values():
        if inst.accepts(x):
            return inst
    if isinstance(x, FuncTuple):
        base = instance_of(x.values[0])
        inst = FuncInstance(base, len(x.values))
        if inst.accepts(x):
            return inst
    raise UsageError(f"{x!r} is not an element of any model")


__all__ = [
    "Interval", "IntervalUnion", "RealDisk", "Matrix2", "MatrixSet", "FuncTuple",
    "Real", "IntervalInstance", "UnionInstance", "DiskInstance",
    "MatrixSetInstance", "FuncInstance", "RealInstance", "INTERVAL", "UNION",
    "DISK", "MATRIX", "REAL", "FUNC", "DEFAULT_TAGS", "get_instance",
    "instance_of", "normalize_union", "union_mul", "disk_mul", "matrixset_mul",
    "IDENTITY2", "ZERO2",
]
