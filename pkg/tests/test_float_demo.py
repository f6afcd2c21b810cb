from qalg.conformance import SuiteConfig, run_suite
from qalg.conformance.mutants import resolve_instance
from qalg.instances.float_interval import FloatInterval, FloatIntervalInstance


def test_tolerant_order_absorbs_rounding():
    X = FloatIntervalInstance()
    a = X.add(FloatInterval(0.1, 0.2), FloatInterval(0.2, 0.4))
    assert a.lo != 0.3
    assert X.equal(a, FloatInterval(0.3, 0.6))
    assert not FloatIntervalInstance(0.0).equal(a, FloatInterval(0.3, 0.6))


def test_tolerance_comes_from_config():
    assert resolve_instance("interval:f64", 1e-6).tol == 1e-6
    assert resolve_instance("interval:f64").tol == 1e-9


def test_demo_run():
    rep = run_suite(SuiteConfig(instances=("interval:f64",), cases=300, groups=("axioms",),
                                float_tolerance=1e-9))
    assert rep.passed
