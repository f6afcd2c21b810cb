from __future__ import annotations

import random
from typing import Iterator

from gmpy2 import mpq

from ..exact import Scalar

# Denominators are drawn from a skewed table so most values stay cheap to
# multiply; every entry is <= 64.
_DENOMS = (1, 1, 1, 1, 1, 2, 2, 2, 3, 4, 4, 5, 8, 16, 64)
DEFAULT_BOUND = 64


def rand_scalar(rng: random.Random, bound: int = DEFAULT_BOUND) -> Scalar:
    return mpq(rng.randint(-bound, bound), rng.choice(_DENOMS))


def rand_nonneg(rng: random.Random, bound: int = DEFAULT_BOUND) -> Scalar:
    return mpq(rng.randint(0, bound), rng.choice(_DENOMS))


def rand_nonzero(rng: random.Random, bound: int = DEFAULT_BOUND) -> Scalar:
    while True:
        q = rand_scalar(rng, bound)
        if q != 0:
            return q


def rand_small_scalar(rng: random.Random) -> Scalar:
    """Scalars for the multiplier slots of the axioms: small, with 0 and +-1 frequent."""
    r = rng.random()
    if r < 0.1:
        return mpq(0)
    if r < 0.2:
        return mpq(1)
    if r < 0.3:
        return mpq(-1)
    return mpq(rng.randint(-9, 9), rng.choice((1, 1, 2, 3, 4)))


def scalar_size(q: Scalar) -> int:
    return abs(int(q.numerator)) + int(q.denominator)


def shrink_scalar(q: Scalar) -> Iterator[Scalar]:
    """Simpler rationals than ``q`` (strictly smaller :func:`scalar_size`)."""
    seen = set()
    size = scalar_size(q)
    num, den = int(q.numerator), int(q.denominator)
    cands = [mpq(0)]
    if den > 1:
        cands.append(mpq(int(num / den)))  # truncation toward zero
        cands.append(mpq(num // den))
        cands.append(mpq(num // den + 1))
        cands.append(mpq(num, den // 2 if den > 2 else 1))
    if num < 0:
        cands.append(-q)
    cands.append(mpq(int(num / 2), den))
    cands.append(mpq(num - (1 if num > 0 else -1), den))
    for c in cands:
        if c not in seen and scalar_size(c) < size:
            seen.add(c)
            yield c
