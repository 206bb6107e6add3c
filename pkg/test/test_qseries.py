#
#   Test the q-expansions, weak Jacobi forms and Eisenstein series
#   Copyright EAVISE
#

import io
from fractions import Fraction
from pathlib import Path
import pytest
import numpy as np
import sympy
import sjo
from sjo.qseries import (
    QSeries, FourierJacobiSeries, eta, eta_product, theta1, theta1_triple_product, theta_series,
    weak_jacobi, heat_on_series, theta_decompose, theta_reconstruct, ez_correspond, heat_ez_check, serre_compat_check,
    eisenstein_G, eisenstein_E, eisenstein_G_value, quasi_G2_star, twisted_G, twisted_G_laurent, pole_distance,
    golden_text, write_golden, read_golden, check_golden,
)

golden = Path(__file__).parent.parent / 'golden'


@pytest.fixture(scope='module')
def phi():
    return {k: weak_jacobi(k, 8) for k in (-2, 0)}


# Series arithmetic
def test_reciprocal():
    geometric = QSeries({0: 1, 1: -1}, 10).reciprocal()
    assert geometric == QSeries({n: 1 for n in range(10)}, 10)
    assert (QSeries({0: 1, 1: -1}, 10) * geometric) == QSeries.one(10)


def test_truncation():
    s = QSeries({0: 1, 3: 2}, 5)
    assert s[3] == 2
    assert s[4] == 0
    with pytest.raises(sjo.errors.TruncationTooSmall):
        s[5]
    with pytest.raises(sjo.errors.TruncationTooSmall):
        s.truncate(6)
    # A product is only known as far as both operands allow
    assert (s * QSeries({1: 1}, 3)).trunc == 3


def test_eta():
    shifted = QSeries({e - Fraction(1, 24): c for e, c in eta(12).items()}, 12 - Fraction(1, 24))
    assert shifted == eta_product(12)
    assert eta(5).weight == Fraction(1, 2)


def test_theta1():
    assert theta1(8) == theta1_triple_product(8)
    assert theta1(8).at_zero().is_zero()
    with pytest.raises(sjo.errors.ConfigError):
        theta_series(2, 5)


# Weak Jacobi forms
def test_weak_jacobi_coefficients(phi):
    m2, z0 = phi[-2], phi[0]
    assert m2.q_part(0) == {-1: 1, 0: -2, 1: 1}
    assert m2.q_part(1) == {-2: -2, -1: 8, 0: -12, 1: 8, 2: -2}
    assert z0.q_part(0) == {-1: 1, 0: 10, 1: 1}
    assert z0.q_part(1) == {-2: 10, -1: -64, 0: 108, 1: -64, 2: 10}
    assert z0[2, 0] == 808
    assert m2[2, 0] == -56

    for s, k in ((m2, -2), (z0, 0)):
        assert s.weight == k
        assert s.index == 1
        assert s.trunc == 8
        assert s.is_symmetric()


def test_weak_jacobi_at_zero(phi):
    assert phi[-2].at_zero().is_zero()
    assert phi[0].at_zero() == QSeries({0: 12}, 8)
    assert phi[0].evaluate(1j, 0, tol=1e-9) == pytest.approx(12)


def test_weak_jacobi_errors():
    with pytest.raises(sjo.errors.ConfigError):
        weak_jacobi(2, 5)
    with pytest.raises(sjo.errors.ConfigError):
        weak_jacobi(0, 0)
    with pytest.raises(sjo.errors.TruncationTooSmall):
        weak_jacobi(-2, 3).evaluate(0.1j, 0.1, tol=1e-12)


# Heat operator and theta decomposition
def test_heat_on_series(phi):
    heat = heat_on_series(phi[-2])
    assert heat.prefactor == 4 * sympy.pi**2
    assert heat.weight == 0
    assert heat[0, 1] == -1
    assert heat[0, 0] == 0
    assert heat[1, 1] == 8 * 3
    with pytest.raises(sjo.errors.InvalidWeightIndex):
        heat_on_series(phi[-2], M=2)


def test_theta_decompose(phi):
    h0, h1 = theta_decompose(phi[-2])
    assert h0[0] == -2
    assert h0[1] == -12
    assert h1[Fraction(-1, 4)] == 1
    assert h1[Fraction(3, 4)] == 8
    assert h0.weight == Fraction(-5, 2)

    for k, s in phi.items():
        h0, h1 = theta_decompose(s)
        assert theta_reconstruct(h0, h1, k) == s


def test_ez_correspond(phi):
    h = ez_correspond(phi[0])
    assert h[-1] == 1
    assert h[0] == 10
    assert h[3] == -64
    assert h[4] == 108
    # Only exponents N = 0, 3 mod 4 occur
    assert all(e % 4 in (0, 3) for e in h.coeffs)


def test_not_decomposable():
    s = FourierJacobiSeries({(0, 0): 1, (1, 2): 2}, 3, index=1)
    with pytest.raises(sjo.errors.NotThetaDecomposable):
        theta_decompose(s)
    with pytest.raises(sjo.errors.InvalidWeightIndex):
        theta_decompose(s.with_signature(0, 2))
    with pytest.raises(sjo.errors.ConfigError):
        theta_decompose(theta1(4).with_signature(0, 1))


@pytest.mark.parametrize('k', [-2, 0])
def test_heat_correspondence(phi, k):
    assert heat_ez_check(phi[k]) == 0
    assert serre_compat_check(phi[k]) == 0
    assert serre_compat_check(phi[k], literal=True) != 0


def test_serre_compat_needs_weight(phi):
    with pytest.raises(sjo.errors.InvalidWeightIndex):
        serre_compat_check(phi[0].with_signature(None, 1))
    assert serre_compat_check(phi[0].with_signature(None, 1), k=0) == 0


# Golden files
@pytest.mark.parametrize('name', ['phi_-2_1.csv', 'phi_0_1.csv'])
def test_golden_files(name):
    result = check_golden(golden / name)
    assert result.ok
    assert result.mismatches == []
    assert result.expected == result.actual


def test_golden_roundtrip(tmp_path, phi):
    path = tmp_path / 'sub' / 'phi.csv'
    write_golden(phi[0], path, provenance='test')
    assert path.read_text().startswith('# weight 0 index 1 dq 1 dz 1 trunc 8\n# test\n')
    assert read_golden(path) == phi[0]
    assert check_golden(path).ok


def test_golden_denominators(phi):
    # Exponents n_num/24 and r_num/2 describe the same series
    lines = golden_text(phi[-2]).splitlines()
    rows = []
    for line in lines[2:]:
        n, r, num, den = map(int, line.split(','))
        rows.append(f'{24 * n},{2 * r},{num},{den}')
    header = lines[0].replace('dq 1 dz 1', 'dq 24 dz 2')
    text = '\n'.join([header, lines[1]] + rows) + '\n'
    assert read_golden(io.StringIO(text)) == phi[-2]
    assert check_golden(io.StringIO(text), phi[-2]).ok

    with pytest.raises(sjo.errors.ConfigError):
        read_golden(io.StringIO(text.replace('dq 24', 'dq 5')))
    with pytest.raises(sjo.errors.ConfigError):
        read_golden(io.StringIO(text.replace('dz 2', 'dz 3')))


def test_golden_mismatch(phi):
    text = golden_text(phi[-2]).replace('\n1,0,-12,1\n', '\n1,0,-11,1\n')
    result = check_golden(io.StringIO(text))
    assert not result.ok
    assert result.mismatches == [(1, 0)]

    with pytest.raises(sjo.errors.ConfigError):
        read_golden(io.StringIO('weight -2\n0,0,1,1\n'))
    with pytest.raises(sjo.errors.ConfigError):
        read_golden(io.StringIO('# weight -2 index 1 dq 1 dz 1 trunc 2\nn,r,c,d\n0,0,1,1\n'))


# Eisenstein series
def test_eisenstein_coefficients():
    E4 = eisenstein_E(4, 10)
    assert E4[1] == 240
    assert E4[2] == 240 * 9
    assert E4 * E4 == eisenstein_E(8, 10)
    assert eisenstein_E(2, 5)[1] == -24
    assert eisenstein_G(4, 5).prefactor == (2 * sympy.pi * sympy.I)**4
    assert eisenstein_G(4, 5)[0] == Fraction(1, 720)
    with pytest.raises(sjo.errors.ConfigError):
        eisenstein_G(3, 5)


@pytest.mark.parametrize('k', [2, 4, 6])
def test_eisenstein_values(k):
    z = 0.1 + 1.1j
    assert eisenstein_G_value(k, z) == pytest.approx(eisenstein_G(k, 40).evaluate(z), rel=1e-9)


def test_eisenstein_modularity():
    z = -0.3 + 0.9j
    assert eisenstein_G_value(4, -1 / z) == pytest.approx(z**4 * eisenstein_G_value(4, z), rel=1e-9)
    assert eisenstein_G_value(6, -1 / z) == pytest.approx(z**6 * eisenstein_G_value(6, z), rel=1e-9)
    assert quasi_G2_star(-1 / z) == pytest.approx(z**2 * quasi_G2_star(z), rel=1e-9)
    assert eisenstein_G_value(2, -1 / z) != pytest.approx(z**2 * eisenstein_G_value(2, z), rel=1e-3)


@pytest.mark.parametrize('n', [3, 4])
def test_twisted_eisenstein(n):
    z = 0.2 + 1.2j
    w = 0.05 + 0.02j
    value = twisted_G(n, z, w)
    assert value == pytest.approx(twisted_G_laurent(n, z, w), rel=1e-8)
    assert twisted_G(n, z, w + 1) == pytest.approx(value, rel=1e-10)
    assert twisted_G(n, z, w + z) == pytest.approx(value, rel=1e-10)


def test_pole_proximity():
    z = 0.2 + 1.2j
    assert pole_distance(z, 0) == 0
    assert pole_distance(z, z + 1 + 1e-5) == pytest.approx(1e-5)
    with pytest.raises(sjo.errors.PoleProximity):
        twisted_G(3, z, z + 1 + 1e-5)
    with pytest.raises(sjo.errors.ConfigError):
        twisted_G(0, z, 0.3)
