"""Independent brute-force oracles used to freeze expected values.

They work on finite rational grids and know nothing about the closed forms
in the package.
"""

from fractions import Fraction as F
from itertools import product


def grid(lo, hi, steps=24):
    lo, hi = F(lo), F(hi)
    if lo == hi:
        return [lo]
    return [lo + (hi - lo) * i / steps for i in range(steps + 1)]


def set_grid(parts, steps=24):
    """Grid points of a finite union of closed intervals given as pairs."""
    pts = set()
    for a, b in parts:
        pts.update(grid(a, b, steps))
    return sorted(pts)


def minkowski(op, xs, ys):
    return sorted({op(a, b) for a, b in product(xs, ys)})


def hull(points):
    return (min(points), max(points))


def grid_excess(xs, ys):
    """max over x of the distance to the nearest y."""
    return max(min(abs(a - b) for b in ys) for a in xs)
