import random

import pytest
from gmpy2 import mpq

from qalg.core import TagMismatch, UsageError
from qalg.instances import INTERVAL, UNION, FuncTuple, Real
from qalg.morphisms import (
    SHIPPED,
    abs_hom,
    char_coordinates,
    char_geometric,
    check_bound,
    check_opr,
    check_quasihom,
    confirm_flags,
    double_map,
    get_hom,
    half_map,
    hom_combine,
    hom_interval_to_disk,
    identity_hom,
    minimize_failure,
    no_char_witness,
    op_norm_estimate,
    rho_map,
    singleton_embedding,
)

from conftest import ev


def test_shipped_values():
    assert half_map()(ev("[-2,2]")) == ev("[-1,1]")
    assert double_map()(ev("[-2,2]")) == ev("[-4,4]")
    assert abs_hom(1)(Real(-3)) == ev("[-3,3]")
    assert singleton_embedding()(Real(2)) == ev("u({2})")


def test_geometric_character_values():
    h = char_geometric(2, 2, 3)
    assert h(Real(8)) == ev("{0,1,2,4,16,32}")
    assert h(Real(0)) == ev("u({0})")
    assert h(Real(-8)) == ev("{-32,-16,-4,-2,-1,0}")


def test_coordinate_character_values():
    h = char_coordinates(2)
    assert h(FuncTuple((Real(1), Real(3)))) == ev("{1,3}")
    assert h(FuncTuple((Real(2), Real(2)))) == ev("u({2})")
    assert h(FuncTuple((Real(1), Real(0)))) == ev("{0,1}")


@pytest.mark.parametrize("x,want", [("[0,2]", "d(1,1)"), ("{3}", "d(3,0)"), ("[-1,3]", "d(1,2)")])
def test_interval_to_disk(x, want):
    assert hom_interval_to_disk()(ev(x)) == ev(want)


def test_combinators():
    assert hom_combine("compose", half_map(), half_map())(ev("[0,4]")) == ev("[3/2,5/2]")
    assert hom_combine("scale", 0, half_map())(ev("[1,5]")) == ev("{0}")
    ident = identity_hom(INTERVAL)
    assert hom_combine("add", ident, ident)(ev("[0,1]")) == ev("[0,2]")
    with pytest.raises(TagMismatch):
        hom_combine("compose", abs_hom(1), hom_interval_to_disk())
    with pytest.raises(UsageError):
        hom_combine("divide", ident, ident)


def test_wrong_domain_is_rejected():
    with pytest.raises(TagMismatch):
        half_map()(ev("d(0,1)"))


def test_half_map_breaks_condition_three_on_the_witness():
    h = half_map()
    a, b = ev("[-2,2]"), ev("[-4,4]")
    lhs = h(INTERVAL.mul(a, b))
    rhs = INTERVAL.mul(h(a), h(b))
    assert (lhs, rhs) == (ev("[-4,4]"), ev("[-2,2]"))
    assert not INTERVAL.leq(lhs, rhs)
    rep = check_quasihom(h, samples=50)
    assert any(f.inputs == (a, b) for f in rep.for_condition("qh3"))
    assert "qh1" not in rep.failed_conditions and "qh2" not in rep.failed_conditions


def test_half_map_is_not_monotone():
    h = half_map()
    assert INTERVAL.leq(ev("{4}"), ev("[0,4]"))
    assert not INTERVAL.leq(h(ev("{4}")), h(ev("[0,4]")))


def test_random_search_alone_finds_the_half_map_failure():
    rep = check_quasihom(half_map(), samples=200, adversarial=False)
    bad = rep.for_condition("qh3")
    assert bad
    small = minimize_failure(half_map(), bad[0])
    assert small.condition == "qh3"
    assert not INTERVAL.leq(*small.got)


def test_double_map_is_not_opr():
    rep = check_opr(double_map(), samples=50)
    assert not rep.passed
    witness = [f for f in rep.failures if f.inputs[0] == ev("{3}")]
    assert witness and witness[0].got[1] == ev("[-4,4]")
    assert INTERVAL.leq(ev("{3}"), ev("[-4,4]")) and not INTERVAL.leq(ev("{3}"), ev("[-2,2]"))


@pytest.mark.parametrize("make", [half_map, rho_map, singleton_embedding, hom_interval_to_disk])
def test_opr_maps_pass(make):
    assert check_opr(make(), samples=300).passed


@pytest.mark.parametrize("make", [lambda: abs_hom(1), lambda: abs_hom(mpq(5, 2)), hom_interval_to_disk,
                                  rho_map, singleton_embedding, lambda: char_coordinates(2),
                                  lambda: char_geometric(2, 2, 6), lambda: identity_hom(UNION)])
def test_quasi_homs_pass(make):
    assert check_quasihom(make(), samples=300).passed


@pytest.mark.parametrize("name", SHIPPED)
def test_declared_bounds_hold(name):
    assert check_bound(get_hom(name), samples=300).passed


def test_confirm_flags_recomputes():
    h = confirm_flags(double_map(), samples=100)
    assert h.quasi_hom is False and h.opr is False
    assert confirm_flags(abs_hom(1), samples=100).quasi_hom is True


def test_op_norms():
    est = op_norm_estimate(char_coordinates(2), samples=300)
    assert est.lower == 1 and est.upper_checked
    assert char_coordinates(2)(FuncTuple((Real(1), Real(0)))).hi == 1
    assert op_norm_estimate(singleton_embedding(), samples=100).lower == 1
    assert op_norm_estimate(hom_combine("scale", 2, identity_hom(INTERVAL)), samples=100).lower == 2


def test_no_real_valued_character():
    t = no_char_witness()
    assert (t.phi_zero, t.phi_one) == (0, 1)
    assert t.zero_below_B() and t.one_below_B()
    assert t.contradiction()


def test_registry_names():
    assert get_hom("abs:5/2")(Real(-2)) == ev("[-5,5]")
    assert get_hom("chargeo:3,2,4").name.startswith("chargeo")
    with pytest.raises(UsageError):
        get_hom("sine")
    with pytest.raises(UsageError):
        get_hom("chargeo:x")


def test_checkers_are_deterministic():
    a = check_quasihom(half_map(), samples=100, seed=7)
    b = check_quasihom(half_map(), samples=100, seed=7)
    assert [f.inputs for f in a.failures] == [f.inputs for f in b.failures]
    assert random.Random(1).random() == random.Random(1).random()
