"""Exact scalars and exact comparisons of square-root magnitudes.

Every scalar in the library is a ``gmpy2.mpq``.  Norms in the matrix-set
model are Frobenius norms, i.e. square roots of rationals; those are carried
as :class:`Sqrt` so that every norm and distance comparison stays exact.
"""

from __future__ import annotations

import re
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Union

import gmpy2
from gmpy2 import mpq

Scalar = type(mpq(0))

ZERO = mpq(0)
ONE = mpq(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?)(\d+)(?:/(\d+))?\s*$")
_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$")


def Q(value) -> Scalar:
    """Coerce ``value`` to an exact rational.

    Accepts ints, mpq, Fraction, Decimal and strings of the form ``p``,
    ``p/q`` or a decimal literal (converted exactly, no binary rounding).
    Floats are converted exactly from their binary value.
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, float):
        f = Fraction(value)
        return mpq(f.numerator, f.denominator)
    if isinstance(value, Decimal):
        f = Fraction(value)
        return mpq(f.numerator, f.denominator)
    if isinstance(value, str):
        return parse_scalar(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return mpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {value!r} to an exact scalar")


def parse_scalar(text: str) -> Scalar:
    m = _RATIONAL_RE.match(text)
    if m:
        sign, num, den = m.groups()
        den = int(den) if den is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        q = mpq(int(num), den)
        return -q if sign == "-" else q
    m = _DECIMAL_RE.match(text)
    if m and (m.group(2) or m.group(3)):
        sign, whole, frac, exp = m.groups()
        frac = frac or ""
        q = mpq(int((whole or "0") + frac), 10 ** len(frac))
        if exp:
            e = int(exp)
            q = q * mpq(10) ** e if e >= 0 else q / mpq(10) ** (-e)
        return -q if sign == "-" else q
    raise ValueError(f"not a rational literal: {text!r}")


def fmt_scalar(q) -> str:
    """Canonical text of a rational: ``p`` or ``p/q``."""
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_perfect_square(q: Scalar) -> bool:
    return q >= 0 and gmpy2.is_square(q.numerator) and gmpy2.is_square(q.denominator)


def exact_sqrt(q: Scalar) -> Scalar:
    return mpq(gmpy2.isqrt(q.numerator), gmpy2.isqrt(q.denominator))


def sqrt_bounds(q: Scalar, bits: int = 64) -> tuple[Scalar, Scalar]:
    """Rational ``(lo, hi)`` with ``lo <= sqrt(q) <= hi`` and ``hi - lo <= 2**-bits``."""
    if q < 0:
        raise ValueError("square root of a negative rational")
    if is_perfect_square(q):
        r = exact_sqrt(q)
        return r, r
    num, den = int(q.numerator), int(q.denominator)
    scale = 1 << bits
    # sqrt(num/den) = sqrt(num*den)/den
    s = gmpy2.isqrt(num * den * scale * scale)
    lo = mpq(int(s), den * scale)
    hi = mpq(int(s) + 1, den * scale)
    return lo, hi


class Sqrt:
    """The non-negative square root of a non-negative rational, held exactly.

    Multiplication by scalars and by other ``Sqrt`` values is closed;
    comparisons against rationals and ``Sqrt`` values are exact.  Sums are
    not representable: use :func:`le_sum`.
    """

    __slots__ = ("square",)

    def __init__(self, square):
        square = Q(square)
        if square < 0:
            raise ValueError("Sqrt of a negative number")
        object.__setattr__(self, "square", square)

    def __setattr__(self, name, value):
        raise AttributeError("Sqrt is immutable")

    @classmethod
    def of(cls, square):
        """``sqrt(square)`` as a rational when it is one, else a ``Sqrt``."""
        square = Q(square)
        if is_perfect_square(square):
            return exact_sqrt(square)
        return cls(square)

    def __repr__(self):
        return f"Sqrt({fmt_scalar(self.square)})"

    def __str__(self):
        return f"sqrt({fmt_scalar(self.square)})"

    def __float__(self):
        return float(gmpy2.sqrt(self.square))

    def __hash__(self):
        return hash(("Sqrt", self.square))

    def _cmp(self, other):
        sq = square_of(other)
        if sq is None:
            return NotImplemented
        return (self.square > sq) - (self.square < sq)

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __mul__(self, other):
        if isinstance(other, Sqrt):
            return Sqrt.of(self.square * other.square)
        if isinstance(other, (int, Scalar, Fraction)):
            other = Q(other)
            if other < 0:
                raise ValueError("Sqrt times a negative scalar is not a magnitude")
            return Sqrt.of(self.square * other * other)
        return NotImplemented

    __rmul__ = __mul__

    def __abs__(self):
        return self


Magnitude = Union[Scalar, Sqrt]


def square_of(v):
    """Square of a non-negative magnitude (rational or ``Sqrt``)."""
    if isinstance(v, Sqrt):
        return v.square
    if isinstance(v, (int, Scalar, Fraction)):
        v = Q(v)
        if v < 0:
            # negative rationals compare below every magnitude
            return -(v * v) - 1
        return v * v
    return None


def bounds(v, bits: int = 96) -> tuple[Scalar, Scalar]:
    if isinstance(v, Sqrt):
        return sqrt_bounds(v.square, bits)
    q = Q(v)
    return q, q


def le_sum(lhs, terms: Iterable) -> bool:
    """Exact test ``lhs <= sum(terms)`` for non-negative magnitudes.

    Rational terms are pooled; up to two irrational roots are decided by
    repeated squaring.  Larger mixes fall back to nested enclosure refinement
    and only return ``True`` on a tie once enclosures agree to 2**-512.
    """
    terms = list(terms)
    q = ZERO
    roots = []
    for t in terms:
        if isinstance(t, Sqrt):
            roots.append(t.square)
        else:
            t = Q(t)
            if t < 0:
                raise ValueError("le_sum expects non-negative terms")
            q += t
    if isinstance(lhs, Sqrt):
        a = lhs.square
    else:
        lq = Q(lhs)
        if lq <= q:
            return True
        # lhs > q >= 0 so squaring is monotone
        a = lq * lq
    if not roots:
        return a <= q * q
    if len(roots) == 1:
        # sqrt(a) <= q + sqrt(b)
        b = roots[0]
        d = a - q * q - b
        return d <= 0 or d * d <= 4 * q * q * b
    if len(roots) == 2 and q == 0:
        b, c = roots
        d = a - b - c
        return d <= 0 or d * d <= 4 * b * c
    return _le_sum_refined(lhs, terms)


def _le_sum_refined(lhs, terms) -> bool:
    for bits in (64, 128, 256, 512):
        llo, lhi = bounds(lhs, bits)
        rlo = sum((bounds(t, bits)[0] for t in terms), ZERO)
        rhi = sum((bounds(t, bits)[1] for t in terms), ZERO)
        if lhi <= rlo:
            return True
        if llo > rhi:
            return False
    return True


def mag_max(values: Iterable):
    """Maximum of magnitudes; ``0`` for an empty iterable."""
    best = ZERO
    for v in values:
        if v > best:
            best = v
    return best


def to_float(v) -> float:
    return float(v)
