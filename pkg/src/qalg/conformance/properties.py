"""The property registry: axioms, norm axioms, lemmas and theorem checks.

Each property has a stable id, an anchor naming the law it checks, a slot
signature used by the shrinker, a case generator and an exact check.  A
check returns ``True`` when the law holds on the case, including the
vacuous case where a hypothesis is false; the generators bias inputs so
that hypotheses are met often.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from gmpy2 import mpq

from .. import morphisms as hm
from ..core import (
    QAInstance,
    Unsupported,
    is_regular,
    singular_chain,
)
from ..exact import ONE, ZERO, le_sum
from ..instances import (
    DiskInstance,
    FuncInstance,
    Interval,
    IntervalInstance,
    IntervalUnion,
    MatrixSetInstance,
    RealInstance,
    UnionInstance,
)
from ..metric import DEFAULT_RESOLUTION, hausdorff, hausdorff_oracle, within
from ..spectrum import SpectrumSet, inverse, is_unit, link_contains, qsp
from .generators import draw, rand_multiplier
from .shrink import SCALAR

AXIOMS = "axioms"
NORM = "norm"
LEMMAS = "lemmas"
METRIC = "metric"
MORPHISMS = "morphisms"
SPECTRUM = "spectrum"
GROUPS = (AXIOMS, NORM, LEMMAS, METRIC, MORPHISMS, SPECTRUM)


@dataclass(frozen=True)
class Property:
    id: str
    anchor: str
    group: str
    check: Callable
    gen: Callable
    #: slot signature for the shrinker, as a function of the instance
    slots: Callable
    applies: Callable = field(default=lambda inst: True)
    #: cap on cases for expensive properties (``None`` means no cap)
    max_cases: Optional[int] = None

    def holds(self, inst: QAInstance, case: tuple) -> bool:
        return bool(self.check(inst, *case))


REGISTRY: dict[str, Property] = {}


def prop(pid, anchor, group, *, slots, gen=None, applies=None, max_cases=None):
    """Register the decorated check under ``pid``."""

    def wrap(check):
        s = slots if callable(slots) else (lambda inst, _k=slots: _slot_sig(inst, _k))
        g = gen or (lambda inst, rng, size, _k=slots: _default_gen(inst, rng, size, _k))
        REGISTRY[pid] = Property(pid, anchor, group, check, g, s,
                                 applies or (lambda inst: True), max_cases)
        return check

    return wrap


def _slot_sig(inst, kinds: str) -> tuple:
    return tuple(SCALAR if k == "s" else inst for k in kinds)


def _default_gen(inst, rng, size, kinds: str) -> tuple:
    return tuple(rand_multiplier(rng) if k == "s" else draw(inst, rng, size) for k in kinds)


def _above(inst, rng, size):
    """``(x, y)`` with ``x <= y`` most of the time."""
    x = draw(inst, rng, size)
    if rng.random() < 0.8:
        return x, inst.generate_above(x, rng)
    return x, draw(inst, rng, size)


def _two_above(inst, rng, size):
    x, y = _above(inst, rng, size)
    z, v = _above(inst, rng, size)
    return x, y, z, v


def _has_identity(inst):
    return inst.has_identity and inst.identity is not None


def _set_model(inst):
    return inst.is_set_model


def _tag_in(*tags):
    return lambda inst: inst.tag in tags


# -- quasi-algebra axioms -----------------------------------------------------

@prop("A01", "x + y = y + x", AXIOMS, slots="xx")
def _a01(X, x, y):
    return X.equal(X.add(x, y), X.add(y, x))


@prop("A02", "x + (y + z) = (x + y) + z", AXIOMS, slots="xxx")
def _a02(X, x, y, z):
    return X.equal(X.add(x, X.add(y, z)), X.add(X.add(x, y), z))


@prop("A03", "x + 0 = x", AXIOMS, slots="x")
def _a03(X, x):
    return X.equal(X.add(x, X.zero), x)


@prop("A04", "a.(b.x) = (ab).x", AXIOMS, slots="ssx")
def _a04(X, a, b, x):
    return X.equal(X.scale(a, X.scale(b, x)), X.scale(a * b, x))


@prop("A05", "a.(x + y) = a.x + a.y", AXIOMS, slots="sxx")
def _a05(X, a, x, y):
    return X.equal(X.scale(a, X.add(x, y)), X.add(X.scale(a, x), X.scale(a, y)))


@prop("A06", "1.x = x", AXIOMS, slots="x")
def _a06(X, x):
    return X.equal(X.scale(ONE, x), x)


@prop("A07", "0.x = 0", AXIOMS, slots="x")
def _a07(X, x):
    return X.equal(X.scale(ZERO, x), X.zero)


@prop("A08", "(a + b).x <= a.x + b.x", AXIOMS, slots="ssx")
def _a08(X, a, b, x):
    return X.leq(X.scale(a + b, x), X.add(X.scale(a, x), X.scale(b, x)))


@prop("A09", "x <= y and z <= v imply x + z <= y + v", AXIOMS, slots="xxxx",
      gen=_two_above)
def _a09(X, x, y, z, v):
    if not (X.leq(x, y) and X.leq(z, v)):
        return True
    return X.leq(X.add(x, z), X.add(y, v))


@prop("A10", "x <= y implies a.x <= a.y", AXIOMS, slots="sxx",
      gen=lambda X, rng, size: (rand_multiplier(rng),) + _above(X, rng, size))
def _a10(X, a, x, y):
    if not X.leq(x, y):
        return True
    return X.leq(X.scale(a, x), X.scale(a, y))


@prop("A11", "x(yz) = (xy)z", AXIOMS, slots="xxx")
def _a11(X, x, y, z):
    return X.equal(X.mul(x, X.mul(y, z)), X.mul(X.mul(x, y), z))


@prop("A12", "a.(xy) = (a.x)y = x(a.y)", AXIOMS, slots="sxx")
def _a12(X, a, x, y):
    lhs = X.scale(a, X.mul(x, y))
    return X.equal(lhs, X.mul(X.scale(a, x), y)) and X.equal(lhs, X.mul(x, X.scale(a, y)))


@prop("A13", "0 0 = 0", AXIOMS, slots="", gen=lambda X, rng, size: ())
def _a13(X):
    return X.equal(X.mul(X.zero, X.zero), X.zero)


@prop("A14", "x(y + z) <= xy + xz and (x + y)z <= xz + yz", AXIOMS, slots="xxx")
def _a14(X, x, y, z):
    return (X.leq(X.mul(x, X.add(y, z)), X.add(X.mul(x, y), X.mul(x, z)))
            and X.leq(X.mul(X.add(x, y), z), X.add(X.mul(x, z), X.mul(y, z))))


@prop("A15", "x <= y and z <= v imply xz <= yv", AXIOMS, slots="xxxx", gen=_two_above)
def _a15(X, x, y, z, v):
    if not (X.leq(x, y) and X.leq(z, v)):
        return True
    return X.leq(X.mul(x, z), X.mul(y, v))


# -- norm axioms --------------------------------------------------------------

@prop("N0", "||0|| = 0", NORM, slots="", gen=lambda X, rng, size: ())
def _n0(X):
    return X.norm(X.zero) == 0


@prop("N1", "x != 0 implies ||x|| > 0", NORM, slots="x")
def _n1(X, x):
    return X.equal(x, X.zero) or X.norm(x) > 0


@prop("N2", "||x + y|| <= ||x|| + ||y||", NORM, slots="xx")
def _n2(X, x, y):
    return le_sum(X.norm(X.add(x, y)), [X.norm(x), X.norm(y)])


@prop("N3", "||a.x|| = |a| ||x||", NORM, slots="sx")
def _n3(X, a, x):
    return X.norm(X.scale(a, x)) == abs(a) * X.norm(x)


@prop("N4", "||xy|| <= ||x|| ||y||", NORM, slots="xx")
def _n4(X, x, y):
    return X.norm(X.mul(x, y)) <= X.norm(x) * X.norm(y)


@prop("N5", "x <= y implies ||x|| <= ||y||", NORM, slots="xx", gen=_above)
def _n5(X, x, y):
    return not X.leq(x, y) or X.norm(x) <= X.norm(y)


@prop("N6", "excess(x, y) = 0 iff x <= y (closedness of the order)", NORM,
      slots="xx", gen=_above)
def _n6(X, x, y):
    return (X.excess(x, y) == 0) == X.leq(x, y)


# -- order and element-class lemmas -----------------------------------------

def _below_zero_gen(X, rng, size):
    if rng.random() < 0.5:
        try:
            return (X.generate_below(X.zero, rng),)
        except (Unsupported, NotImplementedError):
            pass
    return (draw(X, rng, size),)


@prop("L01", "x <= 0 implies x = 0", LEMMAS, slots="x", gen=_below_zero_gen)
def _l01(X, x):
    return not X.leq(x, X.zero) or X.equal(x, X.zero)


def _regular_and_below(X, rng, size):
    x = X.generate_regular(rng)
    if rng.random() < 0.6:
        try:
            return x, X.generate_below(x, rng)
        except (Unsupported, NotImplementedError):
            pass
    return x, draw(X, rng, size)


@prop("L02", "x regular and y <= x imply y = x", LEMMAS, slots="xx", gen=_regular_and_below)
def _l02(X, x, y):
    if not X.is_regular(x) or not X.leq(y, x):
        return True
    return X.equal(y, x)


@prop("L03", "x + y regular implies x and y regular", LEMMAS, slots="xx")
def _l03(X, x, y):
    return not X.is_regular(X.add(x, y)) or (X.is_regular(x) and X.is_regular(y))


@prop("L04", "a.x = x with a not in {0, 1, -1} implies x = 0", LEMMAS, slots="sx")
def _l04(X, a, x):
    if a in (0, 1, -1) or X.equal(x, X.zero):
        return True
    return not X.equal(X.scale(a, x), x)


def structurally_regular(X, x) -> bool:
    """Regularity read off the representation, independent of ``x - x``."""
    if isinstance(X, UnionInstance):
        return x.is_point
    if isinstance(X, IntervalInstance):
        return x.is_point
    if isinstance(X, DiskInstance):
        return x.radius == 0
    if isinstance(X, MatrixSetInstance):
        return len(x.members) == 1
    if isinstance(X, FuncInstance):
        return all(structurally_regular(X.base, v) for v in x.values)
    if isinstance(X, RealInstance):
        return True
    return X.is_regular(x)


@prop("L05", "x regular iff x - x = 0 (singletons, points, radius 0)", LEMMAS, slots="x")
def _l05(X, x):
    return structurally_regular(X, x) == is_regular(X, x)


@prop("L06", "order is equality and every element is regular", LEMMAS, slots="xx",
      applies=_tag_in("real"),
      gen=lambda X, rng, size: (lambda x: (x, x if rng.random() < 0.3 else draw(X, rng, size)))(draw(X, rng, size)))
def _l06(X, x, y):
    return X.leq(x, y) == X.equal(x, y) and X.is_regular(x)


def _chain3(X, rng, size):
    x, y = _above(X, rng, size)
    return x, y, X.generate_above(y, rng)


@prop("L07", "<= is reflexive, antisymmetric and transitive", LEMMAS, slots="xxx", gen=_chain3)
def _l07(X, x, y, z):
    if not X.leq(x, x):
        return False
    if X.leq(x, y) and X.leq(y, x) and not X.equal(x, y):
        return False
    return not (X.leq(x, y) and X.leq(y, z)) or X.leq(x, z)


def _chain_len(X):
    # matrix-set chains triple in size per link
    return 2 if isinstance(X, MatrixSetInstance) else 3


def _link_leq(X, a, b) -> bool:
    from ..instances.sumset import PointSumset

    if isinstance(b, PointSumset):
        if not isinstance(a, PointSumset):
            a = PointSumset.of_union(a)
        return a.issubset(b)
    return X.leq(a, b)


def _link_eq(X, a, b) -> bool:
    from ..instances.sumset import PointSumset

    if isinstance(b, PointSumset):
        # sumsets of one base set differ exactly when their maxima differ
        hi = a.hi if isinstance(a, PointSumset) else a.components[-1].hi
        return hi == b.hi
    return X.equal(a, b)


@prop("L08", "each link of x -> x + x - x chains is strictly above the last", LEMMAS,
      slots="x", applies=_set_model)
def _l08(X, x):
    rep = singular_chain(X, x, _chain_len(X))
    prev = rep.start
    for link in rep.links:
        if not _link_leq(X, prev, link) or _link_eq(X, prev, link):
            return False
        prev = link
    return rep.all_strict


# -- metric -------------------------------------------------------------------

def _diff(X, x, y):
    return X.add(x, X.scale(mpq(-1), y))


@prop("M01", "h(x, y) = h(y, x)", METRIC, slots="xx")
def _m01(X, x, y):
    return hausdorff(X, x, y) == hausdorff(X, y, x)


@prop("M02", "h(x, y) = 0 iff x = y", METRIC, slots="xx",
      gen=lambda X, rng, size: (lambda x: (x, x if rng.random() < 0.3 else draw(X, rng, size)))(draw(X, rng, size)))
def _m02(X, x, y):
    return (hausdorff(X, x, y) == 0) == X.equal(x, y)


@prop("M03", "h(x, z) <= h(x, y) + h(y, z)", METRIC, slots="xxx")
def _m03(X, x, y, z):
    return le_sum(hausdorff(X, x, z), [hausdorff(X, x, y), hausdorff(X, y, z)])


@prop("M04", "h(x, y) <= ||x - y||", METRIC, slots="xx")
def _m04(X, x, y):
    return hausdorff(X, x, y) <= X.norm(_diff(X, x, y))


@prop("M05", "y regular implies h(x, y) = ||x - y||", METRIC, slots="xx",
      gen=lambda X, rng, size: (draw(X, rng, size), X.generate_regular(rng)))
def _m05(X, x, y):
    if not X.is_regular(y):
        return True
    return hausdorff(X, x, y) == X.norm(_diff(X, x, y))


@prop("M06", "h(xy, xz) <= ||x|| h(y, z)", METRIC, slots="xxx")
def _m06(X, x, y, z):
    return hausdorff(X, X.mul(x, y), X.mul(x, z)) <= X.norm(x) * hausdorff(X, y, z)


@prop("M07", "h(x + z, y + z) <= h(x, y)", METRIC, slots="xxx")
def _m07(X, x, y, z):
    return hausdorff(X, X.add(x, z), X.add(y, z)) <= hausdorff(X, x, y)


@prop("M08", "h(a.x, a.y) = |a| h(x, y)", METRIC, slots="sxx")
def _m08(X, a, x, y):
    return hausdorff(X, X.scale(a, x), X.scale(a, y)) == abs(a) * hausdorff(X, x, y)


@prop("M09", "| ||x|| - ||y|| | <= h(x, y)", METRIC, slots="xx")
def _m09(X, x, y):
    h = hausdorff(X, x, y)
    nx, ny = X.norm(x), X.norm(y)
    return le_sum(nx, [ny, h]) and le_sum(ny, [nx, h])


@prop("M10", "closed-form h agrees with the infimum definition within 1/64", METRIC,
      slots="xx", max_cases=1000)
def _m10(X, x, y):
    r, w = hausdorff_oracle(X, x, y, DEFAULT_RESOLUTION)
    return w.certifies(X, x, y) and within(hausdorff(X, x, y), r, DEFAULT_RESOLUTION)


# -- morphisms ----------------------------------------------------------------

def _hom_case(h):
    """``(x, y, a)`` with ``y`` above ``x`` about half the time."""
    def gen(X, rng, size):
        x = h.sample(rng)
        y = h.sample_above(x, rng) if rng.random() < 0.5 else h.sample(rng)
        return x, y, rand_multiplier(rng)
    return gen


def _hom_slots(h):
    return lambda X: (h.domain, h.domain, SCALAR)


def _qh_all(h, x, y, a) -> bool:
    return all(hm._holds(h, c, case) for c, case in (
        ("qh1", (x, a)), ("qh2", (x, y)), ("qh3", (x, y)), ("qh4", (x, y))))


def _hom_prop(pid, anchor, make, home, with_opr=False):
    h = make()

    @prop(pid, anchor, MORPHISMS, slots=_hom_slots(h), gen=_hom_case(h), applies=_tag_in(home))
    def check(X, x, y, a):
        ok = _qh_all(h, x, y, a)
        if with_opr:
            ok = ok and hm._holds(h, "opr", (x, y))
        return ok

    return check


_hom_prop("H01", "abs-hom x -> [-c|x|, c|x|] is a quasi-homomorphism (c = 1)", hm.abs_hom, "real")
_hom_prop("H02", "abs-hom x -> [-c|x|, c|x|] is a quasi-homomorphism (c = 5/2)",
          lambda: hm.abs_hom(mpq(5, 2)), "real")
_hom_prop("H03", "[a,b] -> disk((a+b)/2, (b-a)/2) is an opr quasi-homomorphism",
          hm.hom_interval_to_disk, "interval", with_opr=True)
_hom_prop("H04", "[-a,a] -> [-2a,2a] is an opr quasi-homomorphism on symmetric intervals",
          hm.rho_map, "interval", with_opr=True)
_hom_prop("H05", "x -> {x} is an opr quasi-homomorphism", hm.singleton_embedding, "real",
          with_opr=True)
_hom_prop("H06", "coordinates (x1, x2) -> {x1, x2} form a quasi-character", hm.char_coordinates,
          "real")

_HALF = hm.half_map()


@prop("H07", "same-centre half-length map reflects the order (opr)", MORPHISMS,
      slots=_hom_slots(_HALF), gen=_hom_case(_HALF), applies=_tag_in("interval"))
def _h07(X, x, y, a):
    return hm._holds(_HALF, "opr", (x, y))


_GEO = {N: (hm.char_geometric(2, 2, N), hm.char_geometric(2, 2, N + 1)) for N in range(1, 7)}


def _geo_gen(X, rng, size):
    return (draw(X, rng, size), draw(X, rng, size), rand_multiplier(rng), mpq(rng.randint(1, 6)))


@prop("H08", "geometric character: phi_N(xy) <= phi_N+1(x) phi_N+1(y), "
      "phi_N(x+y) <= phi_N(x) + phi_N(y), phi_N(a.x) = a.phi_N(x)", MORPHISMS,
      slots=lambda X: (X, X, SCALAR, SCALAR), gen=_geo_gen, applies=_tag_in("real"))
def _h08(X, x, y, a, depth):
    if depth.denominator != 1 or int(depth) not in _GEO:
        return True
    h, deeper = _GEO[int(depth)]
    Y = h.codomain
    mult = Y.leq(h.eval(X.mul(x, y)), Y.mul(deeper.eval(x), deeper.eval(y)))
    return mult and hm._holds(h, "qh2", (x, y)) and hm._holds(h, "qh1", (x, a))


_OPR = {"interval": (hm.half_map(), hm.rho_map(), hm.hom_interval_to_disk()),
        "real": (hm.singleton_embedding(),)}


def _opr_inj_gen(X, rng, size):
    h = rng.choice(_OPR[X.tag])
    x = h.sample(rng)
    return x, (x if rng.random() < 0.2 else h.sample(rng)), mpq(_OPR[X.tag].index(h))


@prop("H09", "opr maps are injective", MORPHISMS, slots=lambda X: (X, X, SCALAR),
      gen=_opr_inj_gen, applies=_tag_in("interval", "real"))
def _h09(X, x, y, which):
    maps = _OPR[X.tag]
    if not 0 <= which < len(maps) or which.denominator != 1:
        return True
    h = maps[int(which)]
    try:
        fx, fy = h.eval(x), h.eval(y)
    except Exception:
        return True  # outside a restricted domain after shrinking
    return not h.codomain.equal(fx, fy) or X.equal(x, y)


_RHO = hm.rho_map()


def _sym_pair(X, rng, size):
    return _RHO.sample(rng), _RHO.sample(rng)


@prop("H10", "rho^-1(y1) + rho^-1(y2) <= rho^-1(y1 + y2) and "
      "rho^-1(y1) rho^-1(y2) <= rho^-1(y1 y2)", MORPHISMS, slots="xx", gen=_sym_pair,
      applies=_tag_in("interval"))
def _h10(X, y1, y2):
    if y1.lo != -y1.hi or y2.lo != -y2.hi:
        return True
    inv = _RHO.inverse
    return (X.leq(X.add(inv(y1), inv(y2)), inv(X.add(y1, y2)))
            and X.leq(X.mul(inv(y1), inv(y2)), inv(X.mul(y1, y2))))


_KERNEL0 = (hm.abs_hom(), hm.singleton_embedding())


@prop("H11", "trivial kernel: phi(x) regular implies x regular", MORPHISMS, slots="x",
      applies=_tag_in("real"))
def _h11(X, x):
    return all(not h.codomain.is_regular(h.eval(x)) or X.is_regular(x) for h in _KERNEL0)


_SING = hm.singleton_embedding()


@prop("H12", "x -> {x} satisfies phi(1 - x) = 1 - phi(x) when phi(x) is regular", MORPHISMS,
      slots="x", applies=_tag_in("real"))
def _h12(X, x):
    Y = _SING.codomain
    fx = _SING.eval(x)
    if not Y.is_regular(fx):
        return True
    lhs = _SING.eval(X.add(X.identity, X.scale(mpq(-1), x)))
    return Y.equal(lhs, Y.add(Y.identity, Y.scale(mpq(-1), fx)))


_BOUNDED = {}
for _name in hm.SHIPPED:
    _h = hm.get_hom(_name)
    _BOUNDED.setdefault(_h.domain_tag if _h.domain_tag != "func:real:2" else "real", []).append(_h)


def _bound_gen(X, rng, size):
    return tuple(h.sample(rng) for h in _BOUNDED[X.tag])


@prop("H13", "||phi(x)|| <= k ||x|| for the declared bound k of every shipped map",
      MORPHISMS, slots=lambda X: tuple(h.domain for h in _BOUNDED[X.tag]), gen=_bound_gen,
      applies=lambda X: X.tag in _BOUNDED)
def _h13(X, *xs):
    for h, x in zip(_BOUNDED[X.tag], xs):
        try:
            fx = h.eval(x)
        except Exception:
            continue
        if not h.codomain.norm(fx) <= h.bound * h.domain.norm(x):
            return False
    return True


# -- spectrum -----------------------------------------------------------------

_ZERO_SP = SpectrumSet.point(0)


def _unit_and_any(X, rng, size):
    return X.generate_unit(rng), draw(X, rng, size)


@prop("S01", "x unit implies QSp(xy) <= {0} u QSp(yx)", SPECTRUM, slots="xx",
      gen=_unit_and_any, applies=_tag_in("union", "matrix"))
def _s01(X, x, y):
    if not is_unit(X, x):
        return True
    return qsp(X, X.mul(x, y)).issubset(_ZERO_SP | qsp(X, X.mul(y, x)))


@prop("S02", "every lambda in QSp(x) has |lambda| <= ||x||", SPECTRUM, slots="x",
      applies=_has_identity)
def _s02(X, x):
    m = qsp(X, x).max_abs()
    return m is None or m <= X.norm(x)


@prop("S03", "x <= y implies QSp(x) <= QSp(y)", SPECTRUM, slots="xx", gen=_above,
      applies=_has_identity)
def _s03(X, x, y):
    return not X.leq(x, y) or qsp(X, x).issubset(qsp(X, y))


@prop("S04", "QSp(x) lies in QSp of every link of the x -> x + x - x chain (10 links)",
      SPECTRUM, slots="x", applies=_tag_in("union", "interval", "disk"))
def _s04(X, x):
    sp = qsp(X, x)
    rep = singular_chain(X, x, 10)
    return all(link_contains(X, link, sp) for link in rep.links)


@prop("S05", "x unit implies x(y + z) = xy + xz", SPECTRUM, slots="xxx",
      gen=lambda X, rng, size: (X.generate_unit(rng), draw(X, rng, size), draw(X, rng, size)),
      applies=_tag_in("union", "matrix"))
def _s05(X, x, y, z):
    if not is_unit(X, x):
        return True
    return X.equal(X.mul(x, X.add(y, z)), X.add(X.mul(x, y), X.mul(x, z)))


@prop("S06", "units are regular", SPECTRUM, slots="x",
      gen=lambda X, rng, size: (X.generate_unit(rng) if rng.random() < 0.7 else draw(X, rng, size),),
      applies=_has_identity)
def _s06(X, x):
    return not is_unit(X, x) or X.is_regular(x)


def _near_units(X, rng, size):
    x = X.generate_unit(rng)
    a = x.lo
    # |t| < |a| / 2 keeps h(x, y) below 1 / (2 ||x^-1||)
    t = a * mpq(rng.randint(-63, 63), 128)
    return x, IntervalUnion.point(a + t)


@prop("S07", "units x, y with h(x, y) < 1/(2||x^-1||) have ||y^-1|| <= 2||x^-1||", SPECTRUM,
      slots="xx", gen=_near_units, applies=_tag_in("union"))
def _s07(X, x, y):
    if not (is_unit(X, x) and is_unit(X, y)):
        return True
    nxi = X.norm(inverse(X, x))
    if not hausdorff(X, x, y) * 2 * nxi < 1:
        return True
    return X.norm(inverse(X, y)) <= 2 * nxi


def _unit_radius(X, rng, size):
    from ..instances._common import rand_nonneg
    r = rand_nonneg(rng) or mpq(1, 2)
    return X.generate_unit(rng), r


@prop("S08", "units are not open: [a - r/2, a + r/2] is within r of {a} and is not a unit",
      SPECTRUM, slots=lambda X: (X, SCALAR), gen=_unit_radius, applies=_tag_in("union"))
def _s08(X, x, r):
    if r <= 0 or not is_unit(X, x):
        return True
    a = x.lo
    y = IntervalUnion.of(Interval(a - r / 2, a + r / 2))
    return hausdorff(X, x, y) <= r and not is_unit(X, y)


_IMAGE_MAPS = (hm.half_map(), hm.hom_interval_to_disk())


@prop("S09", "maps onto their codomain: QSp(phi(x)) <= QSp(x)", SPECTRUM, slots="x",
      applies=_tag_in("interval"))
def _s09(X, x):
    sx = qsp(X, x)
    return all(qsp(h.codomain, h.eval(x)).issubset(sx) for h in _IMAGE_MAPS)


# -- manifest -----------------------------------------------------------------

AXIOM_IDS = tuple(f"A{i:02d}" for i in range(1, 16))
NORM_IDS = tuple(f"N{i}" for i in range(1, 7))


def properties(groups=None, ids=None) -> list:
    out = []
    for pid in sorted(REGISTRY):
        p = REGISTRY[pid]
        if groups is not None and p.group not in groups:
            continue
        if ids is not None and pid not in ids:
            continue
        out.append(p)
    return out


def anchors() -> dict:
    return {pid: p.anchor for pid, p in REGISTRY.items()}
