import pytest
from gmpy2 import mpq

from qalg.instances import DISK, INTERVAL, MATRIX, REAL, UNION, Matrix2
from qalg.spectrum import (
    ENCLOSURE_WIDTH,
    ZERO_ONLY,
    NotAUnit,
    RegularScope,
    SpectrumSet,
    inverse,
    is_unit,
    link_contains,
    qsp,
    sp_matrix2,
    sp_real,
)
from qalg.core import UsageError, singular_chain

from conftest import ev


def test_units():
    assert is_unit(UNION, ev("u({2})"))
    assert inverse(UNION, ev("u({2})")) == ev("u({1/2})")
    assert not is_unit(UNION, ev("u([0,1])"))
    with pytest.raises(NotAUnit):
        inverse(UNION, ev("u([0,1])"))
    assert inverse(MATRIX, MATRIX.identity) == MATRIX.identity


@pytest.mark.parametrize("a", [3, 0, mpq(-1, 2)])
def test_real_spectrum_is_the_point(a):
    assert sp_real(a) == SpectrumSet.point(a)


def test_matrix_spectra():
    assert sp_matrix2(Matrix2((1, 0, 0, 2))) == SpectrumSet(((1, 1), (2, 2)))
    assert sp_matrix2(Matrix2((0, -1, 1, 0))).empty
    assert sp_matrix2(Matrix2((0, 1, 1, 0))) == SpectrumSet(((-1, -1), (1, 1)))


def test_irrational_eigenvalues_are_tightly_enclosed():
    # lambda^2 - lambda - 1 has roots (1 +- sqrt 5) / 2
    sp = sp_matrix2(Matrix2((1, 1, 1, 0)))
    assert len(sp.parts) == 2
    for part in sp.parts:
        assert part.hi - part.lo <= ENCLOSURE_WIDTH
        # the characteristic polynomial changes sign across each part
        f = lambda t: t * t - t - 1
        assert f(part.lo) * f(part.hi) <= 0


def test_qsp_examples():
    assert qsp(UNION, ev("u([1,2],{5})")) == SpectrumSet(((1, 2), (5, 5)))
    assert qsp(MATRIX, ev("m([[1,0],[0,2]],[[0,-1],[1,0]])")) == SpectrumSet(((1, 1), (2, 2)))
    assert qsp(INTERVAL, ev("[1,2]"), ZERO_ONLY).empty
    assert qsp(INTERVAL, ev("[1,2]")) == SpectrumSet(((1, 2),))
    assert qsp(REAL, ev("r(3)")) == SpectrumSet.point(3)
    assert qsp(DISK, ev("d(1,1)")) == SpectrumSet(((0, 2),))


def test_custom_scope_filters_minorants():
    only_diag = RegularScope("all", admits=lambda t: t.members[0].entries[1] == 0)
    got = qsp(MATRIX, ev("m([[1,0],[0,2]],[[0,1],[1,0]])"), only_diag)
    assert got == SpectrumSet(((1, 1), (2, 2)))
    with pytest.raises(UsageError):
        RegularScope("some")


def test_spectrum_set_json_round_trip():
    s = SpectrumSet(((1, 2), (mpq(7, 2), mpq(7, 2))))
    assert SpectrumSet.from_json(s.to_json()) == s


def test_chain_links_keep_the_spectrum():
    x = ev("u({1},{4},{9})")
    sp = qsp(UNION, x)
    for link in singular_chain(UNION, x, 10).links:
        assert link_contains(UNION, link, sp)
