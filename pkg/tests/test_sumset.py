import random
from itertools import product

import pytest
from gmpy2 import mpq

from qalg.core import Unsupported, add, sub
from qalg.instances import UNION, normalize_union
from qalg.instances.sumset import PointSumset, copies_after


def brute(points, P):
    """All sums e.p with integer e, sum e = 1 and positive part at most P."""
    k = len(points)
    out = set()
    for e in product(range(-P + 1, P + 1), repeat=k):
        if sum(e) == 1 and sum(v for v in e if v > 0) <= P:
            out.add(sum(c * p for c, p in zip(e, points)))
    return out


def test_copies_sequence():
    assert [copies_after(n) for n in range(5)] == [1, 2, 5, 14, 41]


@pytest.mark.parametrize("points", [(0, 1), (0, 2, 3), (mpq(1, 2), 2, mpq(7, 3)), (-5, 1, 4)])
@pytest.mark.parametrize("P", [1, 2, 3])
def test_membership_matches_enumeration(points, P):
    s = PointSumset(points, P)
    want = brute([mpq(p) for p in points], P)
    assert s.lo == min(want) and s.hi == max(want)
    # probe every point of the enumeration plus lattice neighbours outside it
    step = mpq(1, 6)
    probes = {s.lo + i * step for i in range(int((s.hi - s.lo) / step) + 1)} | want
    for lam in probes:
        assert s.contains(lam) == (lam in want), lam
        cert = s.certificate(lam)
        if cert is not None:
            assert s.certifies(lam, cert)


def test_materialize_matches_chain_iteration():
    rng = random.Random(3)
    for _ in range(20):
        pts = sorted({mpq(rng.randint(-6, 6), rng.choice((1, 2, 3))) for _ in range(rng.randint(2, 3))})
        if len(pts) < 2:
            continue
        x = normalize_union([(p, p) for p in pts])
        cur = x
        for n in (1, 2):
            cur = add(UNION, cur, sub(UNION, cur, cur))
            assert PointSumset(pts, copies_after(n)).materialize() == cur


def test_order_between_links():
    a, b = PointSumset((0, 1, 5), 2), PointSumset((0, 1, 5), 5)
    assert a.issubset(b) and a.strictly_below(b)
    assert not b.issubset(a)


def test_four_points_are_not_decided():
    s = PointSumset((0, 1, 3, 7), 5)
    with pytest.raises(Unsupported):
        s.certificate(mpq(2))


def test_large_links_print_compactly():
    s = PointSumset((0, 1, 100), copies_after(10))
    assert str(s).startswith("sumset(")
