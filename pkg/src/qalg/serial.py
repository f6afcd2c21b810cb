"""Lossless JSON encoding of elements.

Every element becomes ``{"kind": tag, "payload": ...}`` with rationals as
``"num/den"`` strings, so nothing passes through binary floats.
"""

from __future__ import annotations

from .core import UsageError
from .exact import Q, Scalar, Sqrt, fmt_scalar
from .instances import (
    FuncTuple,
    Interval,
    IntervalUnion,
    Matrix2,
    MatrixSet,
    Real,
    RealDisk,
)


def to_text(x) -> str:
    """The expression-language spelling of ``x``."""
    if isinstance(x, (Scalar, int)):
        return fmt_scalar(x)
    return str(x)


def _q(v) -> str:
    return fmt_scalar(v)


def to_json(x) -> dict:
    if isinstance(x, Interval):
        return {"kind": "interval", "payload": [_q(x.lo), _q(x.hi)]}
    if isinstance(x, IntervalUnion):
        return {"kind": "union", "payload": [[_q(c.lo), _q(c.hi)] for c in x.components]}
    if isinstance(x, RealDisk):
        return {"kind": "disk", "payload": {"center": _q(x.center), "radius": _q(x.radius)}}
    if isinstance(x, MatrixSet):
        return {"kind": "matrix", "payload": [[_q(v) for v in m.entries] for m in x.members]}
    if isinstance(x, FuncTuple):
        return {"kind": "func", "payload": [to_json(v) for v in x.values]}
    if isinstance(x, Real):
        return {"kind": "real", "payload": _q(x.value)}
    if isinstance(x, Scalar):
        return {"kind": "scalar", "payload": _q(x)}
    raise UsageError(f"cannot serialise {x!r}")


def from_json(obj: dict):
    try:
        kind, p = obj["kind"], obj["payload"]
    except (KeyError, TypeError):
        raise UsageError("expected an object with 'kind' and 'payload'") from None
    if kind == "interval":
        return Interval(Q(p[0]), Q(p[1]))
    if kind == "union":
        # the constructor rejects non-canonical input, keeping the round trip honest
        return IntervalUnion(tuple(Interval(Q(a), Q(b)) for a, b in p))
    if kind == "disk":
        return RealDisk(Q(p["center"]), Q(p["radius"]))
    if kind == "matrix":
        return MatrixSet(tuple(Matrix2(tuple(Q(v) for v in m)) for m in p))
    if kind == "func":
        return FuncTuple(tuple(from_json(v) for v in p))
    if kind == "real":
        return Real(Q(p))
    if kind == "scalar":
        return Q(p)
    raise UsageError(f"unknown kind {kind!r}")


def magnitude_json(v):
    """Norms and distances: exact rational string, or ``sqrt(q)`` for irrational ones."""
    if isinstance(v, Sqrt):
        return {"sqrt": _q(v.square), "approx": float(v)}
    return _q(v)
