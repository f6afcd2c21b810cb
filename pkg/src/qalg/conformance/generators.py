"""Class-stratified random elements.

Several lemmas are vacuous unless regular, singular or symmetric inputs
show up often, so elements are drawn per class rather than uniformly.
"""

from __future__ import annotations

import random

from gmpy2 import mpq

from ..core import QAInstance
from ..instances._common import rand_small_scalar as rand_multiplier

CLASSES = ("zero", "identity", "regular", "symmetric", "generic")
# cumulative thresholds; each class gets at least 5%
_THRESHOLDS = ((0.06, "zero"), (0.12, "identity"), (0.32, "regular"), (0.47, "symmetric"))


def draw_class(rng: random.Random) -> str:
    r = rng.random()
    for t, name in _THRESHOLDS:
        if r < t:
            return name
    return "generic"


def draw(inst: QAInstance, rng: random.Random, size: int = 4, cls: str | None = None):
    """One element of ``inst`` from the stratified distribution."""
    cls = cls or draw_class(rng)
    if cls == "zero":
        return inst.zero
    if cls == "identity":
        one = inst.identity
        if one is None:
            return inst.generate(rng, size)
        k = rng.random()
        if k < 0.4:
            return one
        if k < 0.7:
            return inst.scale(mpq(rng.choice((-2, -1, 2, 3)), rng.choice((1, 2))), one)
        return inst.generate_above(one, rng)
    if cls == "regular":
        return inst.generate_regular(rng)
    if cls == "symmetric":
        return inst.generate_symmetric(rng, size)
    return inst.generate(rng, size)


def generate(inst: QAInstance, size: int = 4, seed=0):
    """Deterministic single draw: the same ``(inst, size, seed)`` gives the same element."""
    return draw(inst, random.Random(f"{inst.tag}:{size}:{seed}"), size)


def stream(inst: QAInstance, seed, size: int = 4):
    rng = random.Random(f"stream:{inst.tag}:{seed}")
    while True:
        yield draw(inst, rng, size)


__all__ = ["CLASSES", "draw", "draw_class", "generate", "stream", "rand_multiplier"]
