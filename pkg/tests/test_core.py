from fractions import Fraction as F

import pytest

from qalg.core import (
    TagMismatch,
    Unsupported,
    UsageError,
    add,
    g_member,
    is_regular,
    is_symmetric,
    l_member,
    l_subset,
    leq,
    mul,
    scale,
    singular_above,
    singular_chain,
    strictly_below,
    sub,
)
from qalg.instances import DISK, INTERVAL, MATRIX, REAL, UNION, Interval

from conftest import ev
from oracles import grid, hull, minkowski


def test_leq_examples():
    assert leq(INTERVAL, ev("{3}"), ev("[-4,4]"))
    assert not leq(INTERVAL, ev("{3}"), ev("[-2,2]"))
    x = ev("[1/3,7/2]")
    assert leq(INTERVAL, x, x)


@pytest.mark.parametrize("a,b,want", [
    ((1, 2), (3, 4), (4, 6)),
    ((0, 1), (-1, 0), (-1, 1)),
])
def test_add_matches_minkowski_oracle(a, b, want):
    got = add(INTERVAL, Interval(*a), Interval(*b))
    assert (got.lo, got.hi) == want
    assert hull(minkowski(lambda s, t: s + t, grid(*a), grid(*b))) == tuple(F(v) for v in want)


def test_add_zero_is_identity():
    x = ev("[-3/2,4]")
    assert add(INTERVAL, x, INTERVAL.zero) == x


def test_scale_examples():
    assert scale(INTERVAL, 0, ev("[5,7]")) == ev("{0}")
    assert scale(INTERVAL, -1, ev("[1,2]")) == ev("[-2,-1]")
    assert scale(UNION, 2, ev("u([0,1],{3})")) == ev("u([0,2],{6})")


@pytest.mark.parametrize("a,b,want", [
    ((-2, 2), (-4, 4), (-8, 8)),
    ((1, 2), (-1, 3), (-2, 6)),
    ((0, 0), (0, 0), (0, 0)),
])
def test_mul_matches_product_oracle(a, b, want):
    got = mul(INTERVAL, Interval(*a), Interval(*b))
    assert (got.lo, got.hi) == want
    assert hull(minkowski(lambda s, t: s * t, grid(*a), grid(*b))) == tuple(F(v) for v in want)


def test_regularity():
    assert is_regular(INTERVAL, ev("{5}"))
    assert not is_regular(INTERVAL, ev("[0,1]"))
    assert is_regular(INTERVAL, ev("{0}"))
    # [0,1]-[0,1] is [-1,1], not {0}
    assert sub(INTERVAL, ev("[0,1]"), ev("[0,1]")) == ev("[-1,1]")


def test_symmetry():
    assert is_symmetric(INTERVAL, ev("[-2,2]"))
    assert not is_symmetric(INTERVAL, ev("[0,1]"))
    assert is_symmetric(INTERVAL, ev("{0}"))


@pytest.mark.parametrize("x,want", [("{5}", "[4,6]"), ("[0,1]", "[-1,2]"), ("{0}", "[-1,1]")])
def test_singular_above(x, want):
    y = singular_above(INTERVAL, ev(x))
    assert y == ev(want)
    assert not is_regular(INTERVAL, y)
    assert strictly_below(INTERVAL, ev(x), y)


def test_chain_interval():
    rep = singular_chain(INTERVAL, ev("[0,1]"), 2)
    assert rep.links == (ev("[-1,2]"), ev("[-4,5]"))
    assert rep.all_strict


def test_chain_from_regular_start():
    rep = singular_chain(INTERVAL, ev("{0}"), 1)
    assert rep.links == (ev("[-1,1]"),)


def test_chain_rejects_bad_length_and_algebras():
    with pytest.raises(UsageError):
        singular_chain(INTERVAL, ev("[0,1]"), 0)
    with pytest.raises(Unsupported):
        singular_chain(REAL, ev("r(2)"), 3)


def test_chain_of_point_set_matches_direct_iteration():
    x = ev("{0,1,3}")
    rep = singular_chain(UNION, x, 3)
    cur = x
    for link in rep.links:
        cur = add(UNION, cur, sub(UNION, cur, cur))
        assert link.materialize() == cur
    assert rep.all_strict


def test_l_and_g_membership():
    assert l_member(INTERVAL, ev("[0,1]"), [ev("[-2,2]")])
    assert not l_member(INTERVAL, ev("{3}"), [ev("[-2,2]")])
    assert l_subset(INTERVAL, [ev("{0}")], [ev("[-1,1]")])
    assert g_member(INTERVAL, ev("[-2,2]"), [ev("[0,1]")])


def test_tag_mismatch():
    with pytest.raises(TagMismatch):
        add(INTERVAL, ev("[0,1]"), ev("d(0,1)"))


def test_disk_and_matrix_orders():
    assert leq(DISK, ev("d(1,1)"), ev("d(0,3)"))
    assert leq(UNION, ev("u([0,1],{3})"), ev("u([0,4])"))
    a = ev("m([[1,2],[3,4]])")
    ab = ev("m([[1,2],[3,4]],[[0,1],[1,0]])")
    assert leq(MATRIX, a, ab)
