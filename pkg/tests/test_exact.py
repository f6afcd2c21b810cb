from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qalg.exact import Q, Sqrt, bounds, fmt_scalar, le_sum, mag_max, parse_scalar


@pytest.mark.parametrize("text,want", [
    ("0.1", F(1, 10)),
    ("1e-2", F(1, 100)),
    ("2.5E1", F(25)),
    ("-3/4", F(-3, 4)),
    (" 7 ", F(7)),
    (".5", F(1, 2)),
])
def test_parse_scalar_is_exact(text, want):
    assert parse_scalar(text) == want


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1.2.3", "1/-2"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


@given(st.fractions())
def test_fmt_parse_round_trip(q):
    assert parse_scalar(fmt_scalar(Q(q))) == q


def test_float_conversion_is_exact():
    assert Q(0.1) == F(0.1)
    assert Q(0.1) != F(1, 10)


def test_sqrt_comparisons():
    assert Sqrt(4) == 2
    assert Sqrt(2) < Q(3) / 2
    lo, hi = bounds(Sqrt(2), 20)
    assert lo * lo <= 2 <= hi * hi


def test_le_sum_with_irrationals():
    # sqrt(8) = 2 sqrt(2) exactly
    assert le_sum(Sqrt(8), [Sqrt(2), Sqrt(2)])
    assert not le_sum(Sqrt(8), [Sqrt(2), Q(1)])
    assert not le_sum(Sqrt(9), [Q(2)])
    assert le_sum(Q(0), [])


@given(st.integers(0, 400), st.integers(0, 400), st.integers(0, 400))
def test_le_sum_agrees_with_squared_comparison(a, b, c):
    # sqrt(a) <= sqrt(b) + sqrt(c)  iff  a - b - c <= 2 sqrt(bc)
    lhs = a - b - c
    want = lhs <= 0 or lhs * lhs <= 4 * b * c
    assert le_sum(Sqrt(a), [Sqrt(b), Sqrt(c)]) == want


def test_mag_max():
    assert str(mag_max([Sqrt(2), Q(1)])) == "sqrt(2)"
    assert mag_max([Q(3), Sqrt(8)]) == 3
