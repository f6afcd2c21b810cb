"""Finite sets of real 2x2 matrices under pointwise sum and product.

Finite sets are closed, so the closure in the set-product definition is a
no-op.  Norms are Frobenius norms and are returned as exact
:class:`~qalg.exact.Sqrt` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from gmpy2 import mpq

from ..core import QAInstance, UsageError
from ..exact import ONE, ZERO, Q, Scalar, Sqrt, fmt_scalar
from ._common import shrink_scalar


@dataclass(frozen=True, slots=True, order=True)
class Matrix2:
    """Row-major entries ``((a, b), (c, d))`` flattened to ``(a, b, c, d)``."""

    entries: tuple

    def __post_init__(self):
        e = self.entries
        if len(e) == 2 and isinstance(e[0], (tuple, list)):
            e = (e[0][0], e[0][1], e[1][0], e[1][1])
        if len(e) != 4:
            raise UsageError("a 2x2 matrix has four entries")
        if any(type(v) is not Scalar for v in e):
            e = tuple(Q(v) for v in e)
        object.__setattr__(self, "entries", tuple(e))

    @classmethod
    def of(cls, a, b, c, d) -> "Matrix2":
        return cls((a, b, c, d))

    @property
    def rows(self) -> tuple:
        a, b, c, d = self.entries
        return ((a, b), (c, d))

    @property
    def trace(self) -> Scalar:
        return self.entries[0] + self.entries[3]

    @property
    def det(self) -> Scalar:
        a, b, c, d = self.entries
        return a * d - b * c

    def frob_sq(self) -> Scalar:
        a, b, c, d = self.entries
        return a * a + b * b + c * c + d * d

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return mat_mul(self, other)

    def __str__(self):
        (a, b), (c, d) = self.rows
        f = fmt_scalar
        return f"[[{f(a)},{f(b)}],[{f(c)},{f(d)}]]"


IDENTITY2 = Matrix2((ONE, ZERO, ZERO, ONE))
ZERO2 = Matrix2((ZERO, ZERO, ZERO, ZERO))


def mat_add(x: Matrix2, y: Matrix2) -> Matrix2:
    a, b, c, d = x.entries
    e, f, g, h = y.entries
    return Matrix2((a + e, b + f, c + g, d + h))


def mat_scale(k, x: Matrix2) -> Matrix2:
    a, b, c, d = x.entries
    return Matrix2((k * a, k * b, k * c, k * d))


def mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    a, b, c, d = x.entries
    e, f, g, h = y.entries
    return Matrix2((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))


def mat_inverse(x: Matrix2) -> Matrix2 | None:
    det = x.det
    if det == 0:
        return None
    a, b, c, d = x.entries
    return Matrix2((d / det, -b / det, -c / det, a / det))


def mat_sub_frob_sq(x: Matrix2, y: Matrix2) -> Scalar:
    a, b, c, d = x.entries
    e, f, g, h = y.entries
    return (a - e) ** 2 + (b - f) ** 2 + (c - g) ** 2 + (d - h) ** 2


@dataclass(frozen=True, slots=True)
class MatrixSet:
    members: tuple

    def __post_init__(self):
        ms = tuple(sorted(set(
            m if type(m) is Matrix2 else Matrix2(m) for m in self.members
        )))
        if not ms:
            raise UsageError("a matrix set must be nonempty")
        object.__setattr__(self, "members", ms)

    @classmethod
    def _raw(cls, members: Iterable[Matrix2]) -> "MatrixSet":
        u = object.__new__(cls)
        object.__setattr__(u, "members", tuple(sorted(set(members))))
        return u

    @classmethod
    def of(cls, *members) -> "MatrixSet":
        return cls(tuple(members))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return "m(" + ",".join(str(m) for m in self.members) + ")"


def matrixset_mul(x: MatrixSet, y: MatrixSet) -> MatrixSet:
    return MatrixSet._raw(mat_mul(a, b) for a in x.members for b in y.members)


_SMALL = (-3, -2, -1, 0, 0, 0, 1, 1, 2, 3)


def rand_matrix(rng) -> Matrix2:
    # small integer entries with an occasional rational keep products cheap
    def entry():
        if rng.random() < 0.15:
            return mpq(rng.randint(-64, 64), rng.choice((2, 3, 4, 8, 64)))
        return mpq(rng.choice(_SMALL))

    return Matrix2((entry(), entry(), entry(), entry()))


class MatrixSetInstance(QAInstance):
    tag = "matrix"

    _zero = MatrixSet._raw((ZERO2,))
    _one = MatrixSet._raw((IDENTITY2,))

    def accepts(self, x):
        return type(x) is MatrixSet

    @property
    def zero(self):
        return self._zero

    @property
    def identity(self):
        return self._one

    def leq(self, x, y):
        ys = set(y.members)
        return all(m in ys for m in x.members)

    def add(self, x, y):
        return MatrixSet._raw(mat_add(a, b) for a in x.members for b in y.members)

    def scale(self, a, x):
        if a == 0:
            return self._zero
        return MatrixSet._raw(mat_scale(a, m) for m in x.members)

    def mul(self, x, y):
        return matrixset_mul(x, y)

    def union_with(self, x, y):
        return MatrixSet._raw(x.members + y.members)

    def norm(self, x):
        return Sqrt.of(max(m.frob_sq() for m in x.members))

    def excess(self, x, y):
        # discrete directed Hausdorff distance in the Frobenius metric
        return Sqrt.of(max(
            min(mat_sub_frob_sq(a, b) for b in y.members) for a in x.members
        ))

    def ball(self, r):
        # a symmetric three-point frame of norm r/sqrt(2) <= r
        s = Q(r) / 2
        return MatrixSet._raw((mat_scale(-s, IDENTITY2), ZERO2, mat_scale(s, IDENTITY2)))

    def unit_ball(self):
        return MatrixSet._raw((mat_scale(-ONE, IDENTITY2), ZERO2, IDENTITY2))

    def inverse(self, x):
        if len(x.members) != 1:
            return None
        inv = mat_inverse(x.members[0])
        return None if inv is None else MatrixSet._raw((inv,))

    def generate(self, rng, size=4):
        k = rng.randint(1, max(1, size))
        return MatrixSet._raw(rand_matrix(rng) for _ in range(k))

    def generate_regular(self, rng):
        return MatrixSet._raw((rand_matrix(rng),))

    def generate_symmetric(self, rng, size=4):
        x = self.generate(rng, max(1, size // 2))
        return self.union_with(x, self.scale(-ONE, x))

    def generate_above_zero(self, rng, size=2):
        return self.union_with(self.generate(rng, size), self._zero)

    def generate_above(self, x, rng):
        y = self.add(x, self.generate_above_zero(rng, 1))
        if rng.random() < 0.4:
            y = self.union_with(y, self.generate(rng, 1))
        return y

    def generate_below(self, x, rng):
        ms = [m for m in x.members if rng.random() < 0.6] or [x.members[0]]
        return MatrixSet._raw(ms)

    def generate_unit(self, rng):
        while True:
            m = rand_matrix(rng)
            if m.det != 0:
                return MatrixSet._raw((m,))

    def shrink(self, x):
        ms = x.members
        if len(ms) > 1:
            for i in range(len(ms)):
                yield MatrixSet._raw(ms[:i] + ms[i + 1:])
        for i, m in enumerate(ms):
            for k in range(4):
                for s in shrink_scalar(m.entries[k]):
                    e = list(m.entries)
                    e[k] = s
                    yield MatrixSet._raw(ms[:i] + (Matrix2(tuple(e)),) + ms[i + 1:])

    def complexity(self, x):
        return len(x.members)
