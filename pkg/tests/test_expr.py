import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qalg.conformance.generators import draw
from qalg.expr import Bin, ExprTypeError, Lit, Neg, ParseError, eval_expr, evaluate, parse_expr, serialize
from qalg.instances import DEFAULT_TAGS, get_instance

from conftest import ev


def test_ast_shapes():
    t = parse_expr("[1,2]+[3,4]")
    assert isinstance(t, Bin) and t.op == "+"
    assert t.left.kind == t.right.kind == "interval"
    t = parse_expr("2*([0,1]+{3})")
    assert t.op == "*" and isinstance(t.right, Bin) and t.right.op == "+"
    assert isinstance(parse_expr("-[1,2]"), Neg)


def test_left_associative():
    t = parse_expr("[0,1]-[0,1]+[2,2]")
    assert t.op == "+" and t.left.op == "-"


@pytest.mark.parametrize("text,want", [
    ("[-2,2]*[-4,4]", "[-8,8]"),
    ("0*[5,7]", "{0}"),
    ("u([0,1],[1,2])", "u([0,2])"),
    ("[1,2]*3/2", "[3/2,3]"),
    ("-[1,2]", "[-2,-1]"),
    ("[0.5,1.25]", "[1/2,5/4]"),
    ("{1,2}*{3}", "u({3},{6})"),
    ("d(2,1)*d(3,1)", "d(6,6)"),
    ("f([0,1],{2})+f({1},{1})", "f([1,2],{3})"),
    ("r(2)*r(3)-r(1)", "r(5)"),
])
def test_eval(text, want):
    assert serialize(ev(text)) == want


def test_scalar_only_expression():
    value, inst = evaluate("1/2+1/3")
    assert inst is None
    assert serialize(value) == "5/6"


def test_type_error_names_both_models():
    with pytest.raises(ExprTypeError, match="interval with disk"):
        evaluate("[1,2]+d(0,1)")
    with pytest.raises(ExprTypeError, match="scalar"):
        evaluate("[1,2]+3")


@pytest.mark.parametrize("text,offset", [
    ("[1,2", 4),
    ("[1,2]+", 6),
    ("[2,1]", 0),
    ("x", 0),
    ("[1,2] $", 6),
    ("é+[1,2]", 0),
    ("[1,2]+é", 6),
])
def test_syntax_errors_carry_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.offset == offset
    assert f"at byte {offset}" in str(info.value)


def test_multibyte_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse_expr("{é}")
    assert info.value.offset == 1
    with pytest.raises(ParseError) as info:
        parse_expr("[1,2]+{1}+ é")
    assert info.value.offset == len("[1,2]+{1}+ ".encode())


def test_points_literal_forces_unions():
    _, inst = evaluate("[0,1]+{1,2}")
    assert inst.tag == "union"
    assert isinstance(parse_expr("{1,2}"), Lit)


@settings(max_examples=400, deadline=None)
@given(st.sampled_from(DEFAULT_TAGS), st.integers(0, 2**32))
def test_round_trip_through_text(tag, seed):
    inst = get_instance(tag)
    x = draw(inst, random.Random(seed), 4)
    value, got_inst = eval_expr(parse_expr(serialize(x)))
    assert got_inst.tag == inst.tag
    assert value == x
