"""Maps from a finite index set into a base model, with pointwise structure.

The norm is the maximum of the pointwise norms; the order is pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import QAInstance, UsageError
from ..exact import mag_max


@dataclass(frozen=True, slots=True)
class FuncTuple:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise UsageError("the index set must be nonempty")

    @property
    def index_size(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return "f(" + ",".join(str(v) for v in self.values) + ")"


class FuncInstance(QAInstance):
    """Pointwise quasi-algebra over ``base`` with an index set of ``size`` points."""

    MAX_SIZE = 8

    def __init__(self, base: QAInstance, size: int = 3):
        if not 1 <= size:
            raise UsageError("index size must be positive")
        self.base = base
        self.size = size
        self.tag = f"func:{base.tag}:{size}"
        self.has_identity = base.has_identity
        self.is_set_model = base.is_set_model

    def __reduce__(self):
        return (FuncInstance, (self.base, self.size))

    def accepts(self, x):
        return (
            type(x) is FuncTuple
            and len(x.values) == self.size
            and all(self.base.accepts(v) for v in x.values)
        )

    def _map(self, fn, *tuples):
        return FuncTuple(tuple(fn(*vs) for vs in zip(*(t.values for t in tuples))))

    @property
    def zero(self):
        return FuncTuple((self.base.zero,) * self.size)

    @property
    def identity(self):
        one = self.base.identity
        return None if one is None else FuncTuple((one,) * self.size)

    def leq(self, x, y):
        b = self.base
        return all(b.leq(u, v) for u, v in zip(x.values, y.values))

    def add(self, x, y):
        return self._map(self.base.add, x, y)

    def scale(self, a, x):
        s = self.base.scale
        return FuncTuple(tuple(s(a, v) for v in x.values))

    def mul(self, x, y):
        return self._map(self.base.mul, x, y)

    def norm(self, x):
        return mag_max(self.base.norm(v) for v in x.values)

    def excess(self, x, y):
        return mag_max(self.base.excess(u, v) for u, v in zip(x.values, y.values))

    def ball(self, r):
        return FuncTuple((self.base.ball(r),) * self.size)

    def unit_ball(self):
        return FuncTuple((self.base.unit_ball(),) * self.size)

    def equal(self, x, y):
        return all(self.base.equal(u, v) for u, v in zip(x.values, y.values))

    def inverse(self, x):
        invs = []
        for v in x.values:
            w = self.base.inverse(v)
            if w is None:
                return None
            invs.append(w)
        return FuncTuple(tuple(invs))

    def generate(self, rng, size=4):
        g = self.base.generate
        return FuncTuple(tuple(g(rng, size) for _ in range(self.size)))

    def generate_regular(self, rng):
        return FuncTuple(tuple(self.base.generate_regular(rng) for _ in range(self.size)))

    def generate_symmetric(self, rng, size=4):
        g = self.base.generate_symmetric
        return FuncTuple(tuple(g(rng, size) for _ in range(self.size)))

    def generate_above_zero(self, rng, size=2):
        g = self.base.generate_above_zero
        return FuncTuple(tuple(g(rng, size) for _ in range(self.size)))

    def generate_above(self, x, rng):
        return FuncTuple(tuple(self.base.generate_above(v, rng) for v in x.values))

    def generate_below(self, x, rng):
        return FuncTuple(tuple(self.base.generate_below(v, rng) for v in x.values))

    def generate_unit(self, rng):
        return FuncTuple(tuple(self.base.generate_unit(rng) for _ in range(self.size)))

    def shrink(self, x):
        vals = x.values
        for i, v in enumerate(vals):
            for s in self.base.shrink(v):
                yield FuncTuple(vals[:i] + (s,) + vals[i + 1:])

    def complexity(self, x):
        return max(self.base.complexity(v) for v in x.values)
