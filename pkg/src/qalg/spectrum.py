"""Units, real spectra and the quasi-spectrum.

The quasi-spectrum of ``x`` is the union of the spectra of the regular
elements below ``x``.  For the set models the regular minorants are known
in closed form (the points of ``x``, the real points of a disk, the members
of a matrix set), so nothing here searches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from gmpy2 import mpq

from .core import QAError, QAInstance, Unsupported, UsageError, _check
from .exact import Q, Scalar, exact_sqrt, fmt_scalar, is_perfect_square, sqrt_bounds
from .instances import (
    DiskInstance,
    FuncInstance,
    Interval,
    IntervalInstance,
    Matrix2,
    MatrixSetInstance,
    RealInstance,
    UnionInstance,
)
from .instances.union import merge_pairs, union_contains, IntervalUnion

#: Width bound for enclosures of irrational eigenvalues.
ENCLOSURE_WIDTH = mpq(1, 10**12)
_ENCLOSURE_BITS = 48


class NotAUnit(QAError):
    pass


@dataclass(frozen=True)
class SpectrumSet:
    """A finite union of closed intervals; points are degenerate intervals.

    Parts coming from irrational eigenvalues are rational enclosures, so
    containment between spectrum sets is decided on the outer side.
    """

    parts: tuple = ()

    def __post_init__(self):
        if self.parts:
            pairs = [(p.lo, p.hi) if isinstance(p, Interval) else (Q(p[0]), Q(p[1]))
                     for p in self.parts]
            object.__setattr__(self, "parts", merge_pairs(pairs))

    @classmethod
    def point(cls, a) -> "SpectrumSet":
        a = Q(a)
        return cls((Interval(a, a),))

    @classmethod
    def union_of(cls, sets: Iterable["SpectrumSet"]) -> "SpectrumSet":
        parts = []
        for s in sets:
            parts.extend(s.parts)
        return cls(tuple(parts))

    @property
    def empty(self) -> bool:
        return not self.parts

    def __or__(self, other: "SpectrumSet") -> "SpectrumSet":
        return SpectrumSet(self.parts + other.parts)

    def issubset(self, other: "SpectrumSet") -> bool:
        if self.empty:
            return True
        if other.empty:
            return False
        return union_contains(IntervalUnion._raw(other.parts), IntervalUnion._raw(self.parts))

    def __le__(self, other):
        return self.issubset(other)

    def contains(self, lam) -> bool:
        lam = Q(lam)
        return any(p.lo <= lam <= p.hi for p in self.parts)

    def max_abs(self) -> Optional[Scalar]:
        if self.empty:
            return None
        return max(abs(self.parts[0].lo), abs(self.parts[-1].hi))

    def sample_points(self) -> list:
        """Endpoints and midpoints of every part."""
        pts = []
        for p in self.parts:
            pts.extend((p.lo, p.mid, p.hi))
        return pts

    def to_json(self) -> dict:
        return {
            "empty": self.empty,
            "parts": [{"lo": fmt_scalar(p.lo), "hi": fmt_scalar(p.hi)} for p in self.parts],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SpectrumSet":
        s = cls(tuple((Q(p["lo"]), Q(p["hi"])) for p in obj["parts"]))
        if s.empty != bool(obj["empty"]):
            raise UsageError("inconsistent empty flag")
        return s

    def __str__(self):
        if self.empty:
            return "{}"
        return " u ".join(str(p) for p in self.parts)


EMPTY = SpectrumSet()


# -- units --------------------------------------------------------------------

def is_unit(inst: QAInstance, x) -> bool:
    _check(inst, x)
    if not inst.has_identity:
        raise Unsupported(f"{inst.tag} has no identity")
    return inst.inverse(x) is not None


def inverse(inst: QAInstance, x):
    _check(inst, x)
    y = inst.inverse(x)
    if y is None:
        raise NotAUnit(f"{x} is not product-invertible in {inst.tag}")
    return y


# -- spectra of regular carriers -------------------------------------------

def sp_real(a) -> SpectrumSet:
    """Spectrum of ``a`` in the real field: ``lambda - a`` fails to be invertible only at ``a``."""
    return SpectrumSet.point(a)


def sp_matrix2(A: Matrix2) -> SpectrumSet:
    """Real eigenvalues of a 2x2 matrix from ``l^2 - tr*l + det``.

    Roots are exact when the discriminant is a rational square, otherwise
    enclosed in rational intervals of width at most ``ENCLOSURE_WIDTH``.
    """
    t, d = A.trace, A.det
    disc = t * t - 4 * d
    if disc < 0:
        return EMPTY
    if is_perfect_square(disc):
        s = exact_sqrt(disc)
        lo, hi = (t - s) / 2, (t + s) / 2
        return SpectrumSet(((lo, lo), (hi, hi)))
    slo, shi = sqrt_bounds(disc, _ENCLOSURE_BITS)
    return SpectrumSet((((t - shi) / 2, (t - slo) / 2), ((t + slo) / 2, (t + shi) / 2)))


# -- quasi-spectrum -----------------------------------------------------------

@dataclass(frozen=True)
class RegularScope:
    """Which regular elements of the ambient model count for the quasi-spectrum.

    ``kind == "all"`` admits every regular element.  ``kind == "zero-only"``
    keeps just ``0``; its regular part is the zero algebra, where ``0`` is
    its own identity and is invertible, so every spectrum in it is empty.
    ``admits`` optionally filters regular minorants of models whose
    minorants are finitely many.
    """

    kind: str = "all"
    admits: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("all", "zero-only"):
            raise UsageError(f"unknown scope {self.kind!r}")


ALL = RegularScope("all")
ZERO_ONLY = RegularScope("zero-only")


def regular_minorants(inst: QAInstance, x):
    """The regular elements below ``x`` when there are finitely many, else ``None``."""
    if isinstance(inst, MatrixSetInstance):
        from .instances import MatrixSet
        return [MatrixSet._raw((m,)) for m in x.members]
    if isinstance(inst, RealInstance):
        return [x]
    return None


def qsp(inst: QAInstance, x, scope: RegularScope = ALL) -> SpectrumSet:
    _check(inst, x)
    if not inst.has_identity or inst.identity is None or not inst.is_regular(inst.identity):
        raise Unsupported(f"{inst.tag} lacks a regular identity")
    if scope.kind == "zero-only":
        # Sp inside the zero algebra is empty whether or not 0 <= x
        return EMPTY
    if scope.admits is not None:
        mins = regular_minorants(inst, x)
        if mins is None:
            raise Unsupported(f"custom scopes need finitely many regular minorants; {inst.tag} has a continuum")
        return SpectrumSet.union_of(_sp_regular(inst, t) for t in mins if scope.admits(t))
    return _qsp_all(inst, x)


def _sp_regular(inst: QAInstance, t) -> SpectrumSet:
    """Spectrum of a regular element inside the regular part of ``inst``."""
    if isinstance(inst, MatrixSetInstance):
        return sp_matrix2(t.members[0])
    if isinstance(inst, RealInstance):
        return sp_real(t.value)
    return _qsp_all(inst, t)


def _qsp_all(inst: QAInstance, x) -> SpectrumSet:
    if isinstance(inst, UnionInstance):
        # regular minorants are the singletons {a} with a in x and Sp({a}) = {a}
        return SpectrumSet(x.components)
    if isinstance(inst, IntervalInstance):
        return SpectrumSet(((x.lo, x.hi),))
    if isinstance(inst, DiskInstance):
        # regular minorants are the real points of the disk
        return SpectrumSet((x.real_section(),))
    if isinstance(inst, MatrixSetInstance):
        return SpectrumSet.union_of(sp_matrix2(m) for m in x.members)
    if isinstance(inst, RealInstance):
        return sp_real(x.value)
    if isinstance(inst, FuncInstance):
        # the regular part is a product of copies of the base's regular part;
        # a tuple is invertible iff every coordinate is
        return SpectrumSet.union_of(_qsp_all(inst.base, v) for v in x.values)
    raise Unsupported(f"no quasi-spectrum for {inst.tag}")


def link_contains(inst: QAInstance, link, sp: SpectrumSet) -> bool:
    """``sp <= QSp(link)`` for a chain link, including closed-form point sumsets.

    A sumset of points is a finite point set, so its quasi-spectrum is the
    set itself and containment is point membership.
    """
    from .instances.sumset import PointSumset

    if isinstance(link, PointSumset):
        return all(p.is_point and link.contains(p.lo) for p in sp.parts)
    return sp.issubset(qsp(inst, link))


__all__ = [
    "SpectrumSet", "EMPTY", "NotAUnit", "is_unit", "inverse", "sp_real",
    "sp_matrix2", "RegularScope", "ALL", "ZERO_ONLY", "qsp", "regular_minorants",
    "ENCLOSURE_WIDTH", "link_contains",
]
