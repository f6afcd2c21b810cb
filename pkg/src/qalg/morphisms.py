"""Quasi-homomorphisms, opr maps and the shipped examples.

A :class:`HomSpec` bundles a map with its declared properties.  The
checkers evaluate the four quasi-homomorphism conditions and the opr
property on generated inputs, always starting with the map's adversarial
regression inputs (zero endpoints, sign changes, singletons, known
witnesses).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Optional

from gmpy2 import mpq

from .conformance.generators import draw, rand_multiplier
from .conformance.shrink import SCALAR, shrink
from .core import QAInstance, TagMismatch, Unsupported, UsageError
from .exact import ONE, ZERO, Q, Scalar
from .instances import (
    DISK,
    INTERVAL,
    REAL,
    UNION,
    FuncInstance,
    FuncTuple,
    Interval,
    IntervalUnion,
    Real,
    RealDisk,
)
from .spectrum import EMPTY, SpectrumSet


@dataclass(frozen=True)
class HomSpec:
    name: str
    domain: QAInstance
    codomain: QAInstance
    eval: Callable
    params: dict = field(default_factory=dict, compare=False)
    #: declared flags; ``None`` means not yet established by the checkers
    quasi_hom: Optional[bool] = None
    opr: Optional[bool] = None
    bound: Optional[Scalar] = None
    op_norm: Optional[Scalar] = None
    inverse: Optional[Callable] = field(default=None, compare=False)
    domain_gen: Optional[Callable] = field(default=None, compare=False)
    domain_above: Optional[Callable] = field(default=None, compare=False)
    #: map used on the right-hand side of the product condition
    product_rhs: Optional["HomSpec"] = field(default=None, compare=False)
    adversarial: tuple = ()
    #: union of the spectra of regular codomain elements outside the image
    outside_image_spectrum: Optional[SpectrumSet] = None

    @property
    def domain_tag(self) -> str:
        return self.domain.tag

    @property
    def codomain_tag(self) -> str:
        return self.codomain.tag

    def __call__(self, x):
        return apply_hom(self, x)

    def sample(self, rng: random.Random):
        if self.domain_gen is not None:
            return self.domain_gen(rng)
        return draw(self.domain, rng)

    def sample_above(self, x, rng: random.Random):
        if self.domain_above is not None:
            return self.domain_above(x, rng)
        return self.domain.generate_above(x, rng)


def apply_hom(h: HomSpec, x):
    if not h.domain.accepts(x):
        raise TagMismatch(h.domain.tag, x)
    return h.eval(x)


# -- check reports ------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    condition: str
    inputs: tuple
    relation: str
    got: tuple

    def __str__(self):
        ins = ", ".join(str(v) for v in self.inputs)
        lhs, rhs = self.got
        return f"{self.condition}: ({ins}) expected {self.relation}, got {lhs} vs {rhs}"


@dataclass
class CheckReport:
    condition: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def for_condition(self, cond: str) -> list:
        return [f for f in self.failures if f.condition == cond]

    @property
    def failed_conditions(self) -> set:
        return {f.condition for f in self.failures}


RELATIONS = {
    "qh1": "phi(a.x) = a.phi(x)",
    "qh2": "phi(x+y) <= phi(x)+phi(y)",
    "qh3": "phi(xy) <= phi(x)phi(y)",
    "qh4": "x <= y implies phi(x) <= phi(y)",
    "opr": "phi(x) <= phi(y) implies x <= y",
}


def _qh_outcome(h: HomSpec, cond: str, case: tuple):
    """``(holds, lhs, rhs)`` for one condition on one case."""
    X, Y = h.domain, h.codomain
    if cond == "qh1":
        x, a = case
        lhs, rhs = h.eval(X.scale(a, x)), Y.scale(a, h.eval(x))
        return Y.equal(lhs, rhs), lhs, rhs
    if cond == "qh2":
        x, y = case
        lhs, rhs = h.eval(X.add(x, y)), Y.add(h.eval(x), h.eval(y))
        return Y.leq(lhs, rhs), lhs, rhs
    if cond == "qh3":
        x, y = case
        g = h.product_rhs or h
        lhs, rhs = h.eval(X.mul(x, y)), Y.mul(g.eval(x), g.eval(y))
        return Y.leq(lhs, rhs), lhs, rhs
    if cond == "qh4":
        x, y = case
        if not X.leq(x, y):
            return True, None, None
        lhs, rhs = h.eval(x), h.eval(y)
        return Y.leq(lhs, rhs), lhs, rhs
    if cond == "opr":
        x, y = case
        fx, fy = h.eval(x), h.eval(y)
        # report the image pair: it is what the premise was checked on
        return (not Y.leq(fx, fy)) or X.leq(x, y), fx, fy
    raise ValueError(cond)


def _holds(h, cond, case) -> bool:
    try:
        return _qh_outcome(h, cond, case)[0]
    except (UsageError, Unsupported):
        # the shrinker may leave a restricted domain; such cases are not failures
        return True


def _slots(h: HomSpec, cond: str) -> tuple:
    if cond == "qh1":
        return (h.domain, SCALAR)
    return (h.domain, h.domain)


def _cases(h: HomSpec, cond: str, samples: int, rng: random.Random, adversarial=True):
    for case in h.adversarial if adversarial else ():
        if cond == "qh1":
            yield (case[0], mpq(-2))
            yield (case[1], mpq(1, 2))
        elif cond == "qh4":
            a, b = case
            yield (a, b) if h.domain.leq(a, b) else (b, a)
        else:
            yield case
    for _ in range(samples):
        x = h.sample(rng)
        if cond == "qh1":
            yield (x, rand_multiplier(rng))
        elif cond == "qh4":
            yield (x, h.sample_above(x, rng))
        elif cond == "opr":
            yield _opr_pair(h, x, rng)
        else:
            yield (x, h.sample(rng))


def _opr_pair(h: HomSpec, y, rng: random.Random):
    """A pair likely to satisfy ``phi(x) <= phi(y)``: pull back a minorant of ``phi(y)``."""
    k = rng.random()
    if k < 0.5 and h.inverse is not None:
        z = h.codomain.generate_below(h.eval(y), rng)
        try:
            return (h.inverse(z), y)
        except (UsageError, Unsupported):
            pass
    if k < 0.75:
        return (y, h.sample_above(y, rng))
    return (h.sample(rng), y)


def _run(h: HomSpec, conds, samples: int, seed, adversarial: bool = True) -> CheckReport:
    if samples < 1:
        raise UsageError("samples must be at least 1")
    report = CheckReport("+".join(conds))
    for cond in conds:
        rng = random.Random(f"{h.name}:{cond}:{seed}")
        seen = 0
        for case in _cases(h, cond, samples, rng, adversarial):
            seen += 1
            holds, lhs, rhs = _qh_outcome(h, cond, case)
            if not holds:
                report.failures.append(Failure(cond, case, RELATIONS[cond], (lhs, rhs)))
        report.cases += seen
    return report


def check_quasihom(h: HomSpec, samples: int = 1000, seed=0, adversarial=True) -> CheckReport:
    """Conditions 1-4 on the regression inputs plus ``samples`` random cases each, exactly.

    ``adversarial=False`` skips the regression inputs, which is how a
    failure is shown to be found by random search alone.
    """
    return _run(h, ("qh1", "qh2", "qh3", "qh4"), samples, seed, adversarial)


def check_opr(h: HomSpec, samples: int = 1000, seed=0, adversarial=True) -> CheckReport:
    return _run(h, ("opr",), samples, seed, adversarial)


def minimize_failure(h: HomSpec, failure: Failure) -> Failure:
    """Shrink a failing case while it keeps failing the same condition."""
    cond = failure.condition
    case = shrink(_slots(h, cond), failure.inputs, lambda c: not _holds(h, cond, c))
    _, lhs, rhs = _qh_outcome(h, cond, case)
    return Failure(cond, case, failure.relation, (lhs, rhs))


def check_bound(h: HomSpec, samples: int = 1000, seed=0) -> CheckReport:
    """``||phi(x)|| <= k ||x||`` with the declared ``k``."""
    report = CheckReport("bounded")
    if h.bound is None:
        return report
    rng = random.Random(f"{h.name}:bound:{seed}")
    cases = [c[0] for c in h.adversarial] + [h.sample(rng) for _ in range(samples)]
    for x in cases:
        lhs = h.codomain.norm(h.eval(x))
        rhs = h.bound * h.domain.norm(x)
        report.cases += 1
        if not lhs <= rhs:
            report.failures.append(Failure("bounded", (x,), f"||phi(x)|| <= {h.bound}||x||", (lhs, rhs)))
    return report


def confirm_flags(h: HomSpec, samples: int = 1000, seed=0) -> HomSpec:
    """A copy of ``h`` whose flags are exactly what the checkers establish."""
    return replace(
        h,
        quasi_hom=check_quasihom(h, samples, seed).passed,
        opr=check_opr(h, samples, seed).passed,
    )


# -- shipped maps -------------------------------------------------------------

def _iv_recentre(factor):
    def ev(x: Interval) -> Interval:
        c, half = x.mid, x.width / 2 * factor
        return Interval(c - half, c + half)
    return ev


_IV_ADVERSARIAL = (
    (Interval(-2, 2), Interval(-4, 4)),
    (Interval.point(3), Interval(-2, 2)),
    (Interval.point(0), Interval(0, 4)),
    (Interval(0, 1), Interval(-1, 0)),
    (Interval(1, 2), Interval(1, 2)),
    (Interval(-3, 5), Interval.point(-1)),
)


def half_map() -> HomSpec:
    """Same centre, half the length."""
    return HomSpec(
        "half", INTERVAL, INTERVAL, _iv_recentre(mpq(1, 2)),
        quasi_hom=False, opr=True, bound=ONE,
        inverse=_iv_recentre(mpq(2)), adversarial=_IV_ADVERSARIAL,
        outside_image_spectrum=EMPTY,
    )


def double_map() -> HomSpec:
    """Same centre, double the length."""
    return HomSpec(
        "double", INTERVAL, INTERVAL, _iv_recentre(mpq(2)),
        quasi_hom=False, opr=False, bound=mpq(2),
        inverse=_iv_recentre(mpq(1, 2)), adversarial=_IV_ADVERSARIAL,
    )


def _symmetric_interval(rng):
    from .instances._common import rand_nonneg
    a = rand_nonneg(rng)
    return Interval(-a, a)


def _require_symmetric(x: Interval):
    if x.lo != -x.hi:
        raise UsageError(f"{x} is not symmetric")


def rho_map() -> HomSpec:
    """``[-a, a] -> [-2a, 2a]`` on symmetric intervals."""

    def ev(x):
        _require_symmetric(x)
        return Interval(2 * x.lo, 2 * x.hi)

    def inv(y):
        _require_symmetric(y)
        return Interval(y.lo / 2, y.hi / 2)

    def above(x, rng):
        return INTERVAL.add(x, _symmetric_interval(rng))

    adv = (
        (Interval(-2, 2), Interval(-4, 4)),
        (Interval.point(0), Interval(-1, 1)),
        (Interval(-1, 1), Interval.point(0)),
    )
    return HomSpec(
        "rho", INTERVAL, INTERVAL, ev, quasi_hom=True, opr=True, bound=mpq(2),
        op_norm=mpq(2), inverse=inv, domain_gen=_symmetric_interval,
        domain_above=above, adversarial=adv,
    )


def abs_hom(c=1) -> HomSpec:
    """``x -> [-p(-x), p(x)]`` with the sublinear ``p = c|.|``, ``c >= 1``."""
    c = Q(c)
    if c < 1:
        raise UsageError("abs-hom needs c >= 1 for p(xy) <= p(x)p(y)")

    def ev(x: Real) -> Interval:
        v = c * abs(x.value)
        return Interval(-v, v)

    adv = tuple((Real(a), Real(b)) for a, b in ((0, 0), (1, -1), (-3, 2), (0, 5), (1, 1)))
    return HomSpec(
        f"abs:{c}", REAL, INTERVAL, ev, params={"c": c},
        quasi_hom=True, opr=False, bound=c, op_norm=c, adversarial=adv,
    )


def singleton_embedding() -> HomSpec:
    def ev(x: Real) -> IntervalUnion:
        return IntervalUnion._raw((Interval(x.value, x.value),))

    def inv(y: IntervalUnion) -> Real:
        if not y.is_point:
            raise UsageError(f"{y} is not in the image")
        return Real(y.lo)

    adv = tuple((Real(a), Real(b)) for a, b in ((0, 0), (1, -1), (-3, 2), (0, 5)))
    return HomSpec(
        "singleton", REAL, UNION, ev, quasi_hom=True, opr=True, bound=ONE,
        op_norm=ONE, inverse=inv, adversarial=adv, outside_image_spectrum=EMPTY,
    )


def char_geometric(m: int = 2, k: int = 2, N: int = 8) -> HomSpec:
    """Truncated geometric quasi-character ``{0} u {x/m^n : n<=N} u {x m^n : n<=k}``."""
    if m < 2 or k < 2 or N < 1:
        raise UsageError("need m >= 2, k >= 2, N >= 1")
    m_q = mpq(m)

    def make(depth):
        def ev(x: Real) -> IntervalUnion:
            v = x.value
            pts = {ZERO}
            pts.update(v / m_q ** n for n in range(1, depth + 1))
            pts.update(v * m_q ** n for n in range(1, k + 1))
            return IntervalUnion._raw(tuple(Interval(p, p) for p in sorted(pts)))
        return ev

    deeper = HomSpec(f"chargeo:{m},{k},{N + 1}", REAL, UNION, make(N + 1),
                     params={"m": m, "k": k, "N": N + 1})
    adv = tuple((Real(a), Real(b)) for a, b in ((0, 0), (8, 3), (-8, 5), (1, -1), (0, 7)))
    return HomSpec(
        f"chargeo:{m},{k},{N}", REAL, UNION, make(N), params={"m": m, "k": k, "N": N},
        quasi_hom=True, opr=False, bound=m_q ** k, op_norm=m_q ** k,
        product_rhs=deeper, adversarial=adv,
    )


def char_coordinates(n: int = 2) -> HomSpec:
    """``(x_1..x_n) -> {x_1..x_n}`` on the componentwise algebra ``R^n``."""
    if n < 1:
        raise UsageError("n must be positive")
    dom = FuncInstance(REAL, n)

    def ev(x: FuncTuple) -> IntervalUnion:
        pts = sorted({v.value for v in x.values})
        return IntervalUnion._raw(tuple(Interval(p, p) for p in pts))

    def unit(*vals):
        return FuncTuple(tuple(Real(v) for v in vals))

    e1 = unit(*([1] + [0] * (n - 1)))
    adv = ((e1, unit(*([0] * n))), (unit(*([-1] * n)), e1))
    return HomSpec(
        f"charcoord:{n}", dom, UNION, ev, params={"n": n},
        quasi_hom=True, opr=n == 1, bound=ONE, op_norm=ONE, adversarial=adv,
    )


def hom_interval_to_disk() -> HomSpec:
    """``[a, b] -> disk((a+b)/2, (b-a)/2)``, onto the disk model."""

    def ev(x: Interval) -> RealDisk:
        return RealDisk(x.mid, x.width / 2)

    def inv(d: RealDisk) -> Interval:
        return Interval(*d.real_section())

    return HomSpec(
        "interval2disk", INTERVAL, DISK, ev, quasi_hom=True, opr=True, bound=ONE,
        op_norm=ONE, inverse=inv, adversarial=_IV_ADVERSARIAL,
        outside_image_spectrum=EMPTY,
    )


def identity_hom(inst: QAInstance) -> HomSpec:
    return HomSpec(
        f"identity:{inst.tag}", inst, inst, lambda x: x, quasi_hom=True, opr=True,
        bound=ONE, op_norm=ONE, inverse=lambda y: y,
    )


# -- combinators --------------------------------------------------------------

def hom_combine(kind: str, *args) -> HomSpec:
    """Pointwise ``add``, ``scale`` or ``compose``; flags of the result are unset.

    ``compose`` is limited to endomorphisms of one model, the only case in
    which composition stays inside the space of maps between the same two
    models.
    """
    if kind == "add":
        h1, h2 = args
        if h1.domain != h2.domain or h1.codomain != h2.codomain:
            raise TagMismatch(f"{h1.domain_tag}->{h1.codomain_tag}", f"{h2.domain_tag}->{h2.codomain_tag}")
        Y = h1.codomain
        bound = None if h1.bound is None or h2.bound is None else h1.bound + h2.bound
        return HomSpec(f"({h1.name}+{h2.name})", h1.domain, Y,
                       lambda x: Y.add(h1.eval(x), h2.eval(x)), bound=bound,
                       domain_gen=h1.domain_gen, domain_above=h1.domain_above)
    if kind == "scale":
        a, h = args
        a = Q(a)
        Y = h.codomain
        bound = None if h.bound is None else abs(a) * h.bound
        return HomSpec(f"{a}*{h.name}", h.domain, Y, lambda x: Y.scale(a, h.eval(x)),
                       bound=bound, domain_gen=h.domain_gen, domain_above=h.domain_above)
    if kind == "compose":
        h1, h2 = args
        tags = {h1.domain_tag, h1.codomain_tag, h2.domain_tag, h2.codomain_tag}
        if len(tags) != 1:
            raise TagMismatch(h2.codomain_tag, f"domain of {h1.name}")
        bound = None if h1.bound is None or h2.bound is None else h1.bound * h2.bound
        return HomSpec(f"({h1.name}.{h2.name})", h2.domain, h1.codomain,
                       lambda x: h1.eval(h2.eval(x)), bound=bound,
                       domain_gen=h2.domain_gen, domain_above=h2.domain_above)
    raise UsageError(f"unknown combination {kind!r}")


# -- operator norm ------------------------------------------------------------

@dataclass(frozen=True)
class OpNormEstimate:
    lower: Any
    upper_checked: Optional[bool]
    closed_form: Optional[Scalar]
    samples: int


def _unit_rescale(inst: QAInstance, x):
    n = inst.norm(x)
    if n == 0 or not isinstance(n, type(ONE)):
        return None
    return inst.scale(1 / n, x)


def op_norm_estimate(h: HomSpec, samples: int = 1000, seed=0) -> OpNormEstimate:
    """Sampled ``sup ||phi(x)||`` over ``samples`` norm-one inputs (a lower bound).

    Inputs with zero or irrational norm cannot be rescaled exactly and are
    redrawn.  When a closed form is known, every probe is also checked
    against it.
    """
    rng = random.Random(f"{h.name}:opnorm:{seed}")
    lower = ZERO
    upper_ok = True if h.op_norm is not None else None
    used = 0

    def probes():
        for c in h.adversarial:
            yield c[0]
        for _ in range(50 * samples):
            yield h.sample(rng)

    for x in probes():
        if used >= samples:
            break
        u = _unit_rescale(h.domain, x)
        if u is None:
            continue
        used += 1
        v = h.codomain.norm(h.eval(u))
        lower = max(lower, v)
        if h.op_norm is not None and v > h.op_norm:
            upper_ok = False
    return OpNormEstimate(lower, upper_ok, h.op_norm, used)


# -- the obstruction to real-valued characters --------------------------------

@dataclass(frozen=True)
class NoCharTrace:
    """Forced values of a would-be quasi-homomorphism from sets into the reals."""

    phi_one: Scalar
    phi_zero: Scalar
    B: IntervalUnion
    steps: tuple

    def zero_below_B(self) -> bool:
        return UNION.leq(IntervalUnion.point(0), self.B)

    def one_below_B(self) -> bool:
        return UNION.leq(IntervalUnion.point(1), self.B)

    def contradiction(self) -> bool:
        # order preservation into an equality-ordered codomain forces
        # phi({0}) = phi(B) = phi({1})
        return self.zero_below_B() and self.one_below_B() and self.phi_zero != self.phi_one


def no_char_witness() -> NoCharTrace:
    steps = (
        "phi({1}) = phi({1}{1}) = phi({1})^2 since the order on R is equality",
        "phi({1}) = 1 (taking the non-zero root)",
        "phi({0}) = phi(0.{1}) = 0.phi({1}) = 0",
        "{0} <= {0,1} gives phi({0}) = phi({0,1})",
        "{1} <= {0,1} gives phi({1}) = phi({0,1})",
        "hence 0 = 1",
    )
    return NoCharTrace(ONE, ZERO, IntervalUnion.of(0, 1), steps)


# -- registry -----------------------------------------------------------------

def get_hom(name: str) -> HomSpec:
    """Resolve ``half|double|rho|abs:c|chargeo:m,k,N|charcoord:n|interval2disk|singleton``."""
    head, _, arg = name.partition(":")
    try:
        if head == "half":
            return half_map()
        if head == "double":
            return double_map()
        if head == "rho":
            return rho_map()
        if head == "abs":
            return abs_hom(Q(arg) if arg else ONE)
        if head == "chargeo":
            m, k, N = (int(v) for v in arg.split(",")) if arg else (2, 2, 8)
            return char_geometric(m, k, N)
        if head == "charcoord":
            return char_coordinates(int(arg) if arg else 2)
        if head == "interval2disk":
            return hom_interval_to_disk()
        if head == "singleton":
            return singleton_embedding()
        if head == "identity":
            from .instances import get_instance
            return identity_hom(get_instance(arg or "interval"))
    except ValueError as e:
        raise UsageError(f"bad parameters in {name!r}: {e}") from None
    raise UsageError(f"unknown hom {name!r}")


SHIPPED = ("half", "double", "rho", "abs:1", "abs:2", "singleton", "chargeo:2,2,6",
           "charcoord:2", "interval2disk")
