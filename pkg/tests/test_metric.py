import random

import pytest
from gmpy2 import mpq

from qalg.conformance.generators import draw
from qalg.instances import DEFAULT_TAGS, INTERVAL, MATRIX, UNION, get_instance
from qalg.metric import difference_witness, excess, hausdorff, hausdorff_oracle, norm, within

from conftest import ev
from oracles import grid_excess, set_grid


@pytest.mark.parametrize("x,y,want", [("[0,1]", "[2,5]", 4), ("{3}", "[0,1]", 3), ("[1,2]", "[1,2]", 0)])
def test_hausdorff_examples(x, y, want):
    assert hausdorff(INTERVAL, ev(x), ev(y)) == want


def test_hausdorff_matches_point_set_distance():
    x, y = [(0, 1), (5, 6)], [(2, 3)]
    got = hausdorff(UNION, ev("u([0,1],[5,6])"), ev("u([2,3])"))
    a, b = set_grid(x, 12), set_grid(y, 12)
    assert got == max(grid_excess(a, b), grid_excess(b, a)) == 3


@pytest.mark.parametrize("x,y,res,want", [("[0,1]", "[2,5]", "1/8", 4), ("{3}", "[0,1]", "1/16", 3)])
def test_oracle_examples(x, y, res, want):
    r, w = hausdorff_oracle(INTERVAL, ev(x), ev(y), mpq(res))
    assert want <= r <= want + mpq(res)
    assert w.certifies(INTERVAL, ev(x), ev(y))


def test_oracle_on_equal_inputs_is_zero():
    x = ev("[1/3,2]")
    r, w = hausdorff_oracle(INTERVAL, x, x)
    assert r == 0 and w.a1 == INTERVAL.zero and w.a2 == INTERVAL.zero


def test_oracle_rejects_bad_resolution():
    with pytest.raises(ValueError):
        hausdorff_oracle(INTERVAL, ev("[0,1]"), ev("[0,1]"), 0)


@pytest.mark.parametrize("tag", DEFAULT_TAGS)
def test_oracle_brackets_closed_form(tag):
    inst = get_instance(tag)
    rng = random.Random(f"metric:{tag}")
    res = mpq(1, 64)
    for _ in range(40):
        x, y = draw(inst, rng, 3), draw(inst, rng, 3)
        h = hausdorff(inst, x, y)
        r, w = hausdorff_oracle(inst, x, y, res)
        assert w.certifies(inst, x, y)
        assert within(h, r, res)


def test_difference_witness_lifts():
    x, y = ev("m([[1,0],[0,1]],[[2,0],[0,2]])"), ev("m([[0,0],[0,0]])")
    d = difference_witness(MATRIX, x, y)
    assert MATRIX.leq(x, MATRIX.add(y, d))


def test_norm_and_excess_wrappers():
    assert norm(INTERVAL, ev("[-3,1]")) == 3
    assert excess(INTERVAL, ev("[0,2]"), ev("[0,1]")) == 1
    assert excess(INTERVAL, ev("[0,1]"), ev("[0,2]")) == 0
