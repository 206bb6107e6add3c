#
#   Test the covariant operators
#   Copyright EAVISE
#

from fractions import Fraction
import pytest
import numpy as np
import sjo
from sjo.space import WeightIndex, box_point, random_group_element
from sjo.calculus import ExpPolyTestFunction
from sjo.operators import (
    K, get_operator, list_operators, register_operator, bracket_candidates, weight_kernel, kernel_transform_residual,
)
from sjo.verify import check_covariance

WI1 = WeightIndex(3, [[2]])
WI2 = WeightIndex(2, [[2, Fraction(1, 2)], [Fraction(1, 2), 1]])


# Registry
def test_registry():
    names = [op.name for op in list_operators()]
    for name in ('identity', 'D1', 'D2', 'delta1', 'delta2', 'heat_Lkm', 'D1_det', 'heat_det', 'bracket', 'serre_like', 'H_j'):
        assert name in names

    degree_one = [op.name for op in list_operators(1, 1)]
    general = [op.name for op in list_operators(2, 2)]
    assert 'D1' in degree_one
    assert 'D1' not in general
    assert 'D1_det' in general
    assert 'D1_i' in [op.name for op in list_operators(1, 3)]

    with pytest.raises(sjo.errors.ConfigError):
        get_operator('D3')
    with pytest.raises(sjo.errors.ConfigError):
        register_operator('D1', weight=K)(lambda f, wi: f)


def test_signature():
    out = get_operator('D1').signature(WI1, 1)
    assert out.k == 4
    assert np.array_equal(out.M, [[2]])
    assert get_operator('delta2').signature(WI1, 1).k == 1
    assert get_operator('serre_like').signature(WI1, 1, 'c').k == 4

    out = get_operator('D1_det').signature(WI2, 2)
    assert out.k == 5
    assert np.array_equal(out.M, 2 * WI2.M)

    bracket = get_operator('bracket')
    wis = (WI2.with_weight(3), WeightIndex(2, [[1, 0], [0, 1]]))
    assert bracket.signature(wis, 2).k == 11
    assert bracket.signature(wis, 2, 'b').k == 12
    assert np.array_equal(bracket.signature(wis, 2).M, 2 * (WI2.M + np.eye(2)))

    with pytest.raises(sjo.errors.ConfigError):
        bracket.signature(WI2, 2)

    data = get_operator('D1').to_json(1, 1)
    assert data['k_out'] == 'k + 1'
    assert data['order'] == 1


def test_bracket_candidates():
    candidates = bracket_candidates(WI1, WeightIndex(2, [[1]]), 1)
    assert len(candidates) == 4
    signatures = [wi for _, wi in candidates]
    assert WeightIndex(6, [[3]]) in signatures
    assert WeightIndex(7, [[2]]) in signatures


def test_operator_errors():
    f11 = ExpPolyTestFunction.random(1, 1, 0)
    f22 = ExpPolyTestFunction.random(2, 2, 0)
    D1 = get_operator('D1')
    with pytest.raises(sjo.errors.DimensionMismatch):
        D1(f22, WI2)
    with pytest.raises(sjo.errors.ConfigError):
        D1(f11)
    with pytest.raises(sjo.errors.DimensionMismatch):
        D1(f11, WI2)
    with pytest.raises(sjo.errors.InvalidWeightIndex):
        get_operator('H_j')(f11, WI1)

    serre = get_operator('serre_like')
    with pytest.raises(sjo.errors.ConfigError):
        serre(f11, WI1, variant='e')
    with pytest.raises(sjo.errors.ConfigError):
        serre(f11, WI1, variant='d', a=1, b=0)
    with pytest.raises(sjo.errors.IndexOutOfRange):
        get_operator('D1_i')(ExpPolyTestFunction.random(1, 2, 0), WI2, i=2)


def test_identity():
    f = ExpPolyTestFunction.random(2, 2, 1)
    assert get_operator('identity')(f, WI2) is f


# Covariance
@pytest.mark.parametrize('name', ['D1', 'D2', 'delta1', 'delta2', 'heat_Lkm'])
def test_degree_one(name):
    report = check_covariance(name, WI1, 1, 1, samples=3, timing=False)
    assert report.passed, report


@pytest.mark.parametrize('name, options', [
    ('D1_i', {'i': 1}),
    ('delta1_i', {'i': 0}),
    ('heat_m', {}),
    ('D2_m', {}),
    ('delta2_m', {}),
])
def test_heisenberg(name, options):
    report = check_covariance(name, WI2, 1, 2, samples=2, options=options, timing=False)
    assert report.passed, report


@pytest.mark.slow
@pytest.mark.parametrize('name', ['D1_det', 'delta1_det', 'heat_det', 'D2_det', 'delta2_det'])
def test_general_degree(name):
    report = check_covariance(name, WI2, 2, 2, samples=2, timing=False)
    assert report.passed, report


@pytest.mark.slow
def test_select_rows():
    wi = WeightIndex(2, [[2, Fraction(1, 2), 0], [Fraction(1, 2), 2, Fraction(1, 2)], [0, Fraction(1, 2), 2]])
    report = check_covariance('D1_det', wi, 2, 3, samples=2, options={'rows': [0, 2]}, timing=False)
    assert report.passed, report


@pytest.mark.slow
@pytest.mark.parametrize('n, m, variant', [(1, 1, 'a'), (2, 2, 'a'), (2, 2, 'b')])
def test_bracket(n, m, variant):
    wis = ((WI1 if m == 1 else WI2).with_weight(3), WeightIndex(2, np.eye(m, dtype=int).tolist()))
    report = check_covariance('bracket', wis, n, m, samples=2, options={'variant': variant}, timing=False)
    assert report.passed, report


@pytest.mark.slow
@pytest.mark.parametrize('variant', ['a', 'b', 'c'])
def test_serre_like(variant):
    report = check_covariance('serre_like', WI1, 1, 1, samples=2, options={'variant': variant}, timing=False)
    assert report.passed, report


@pytest.mark.parametrize('name', ['D1', 'heat_Lkm'])
def test_corpus(name):
    report = check_covariance(name, WeightIndex(-2, [[1]]), 1, 1, samples=2, mode='corpus', timing=False)
    assert report.passed, report


def test_wrong_weight_is_detected():
    out = get_operator('D1').signature(WI1, 1)
    report = check_covariance('D1', WI1, 1, 1, samples=3, out=out.with_weight(out.k + 1), negative=True, timing=False)
    assert report.passed
    assert report.max_residual > 1e-2

    report = check_covariance('heat_hol', WI1, 1, 1, samples=3, negative=True, timing=False)
    assert report.passed


@pytest.mark.slow
@pytest.mark.parametrize('name, shift', [('D1_det', 1), ('heat_det', 5)])
def test_wrong_weight_is_detected_in_general_degree(name, shift):
    # The factor of automorphy of index nM is huge, the comparison must not depend on its size
    out = get_operator(name).signature(WI2, 2)
    report = check_covariance(name, WI2, 2, 2, samples=2, out=out.with_weight(out.k + shift), negative=True, timing=False)
    assert report.passed, report
    assert report.max_residual > 1e-2


def test_check_covariance_errors():
    with pytest.raises(sjo.errors.DimensionMismatch):
        check_covariance('D1', WI2, 2, 2, samples=1)
    with pytest.raises(sjo.errors.ConfigError):
        check_covariance('D1', WI1, 1, 1, samples=1, mode='exact')
    with pytest.raises(sjo.errors.ConfigError):
        check_covariance('D1_det', WI2, 2, 2, samples=1, mode='corpus')


# Degeneration to degree one
@pytest.mark.parametrize('general, degree1, factor', [
    ('D1_det', 'D1', 1),
    ('delta1_det', 'delta1', 1),
    ('heat_det', 'heat_Lkm', 2),
    ('D2_det', 'D2', 1),
    ('delta2_det', 'delta2', 1),
    ('D1_i', 'D1', 1),
    ('delta1_i', 'delta1', 1),
    ('heat_m', 'heat_Lkm', 1),
    ('D2_m', 'D2', 1),
    ('delta2_m', 'delta2', 1),
])
def test_degeneration(general, degree1, factor):
    x = box_point(1, 1, 3)
    f = ExpPolyTestFunction.random(1, 1, 3)
    lhs = get_operator(general)(f, WI1)(x) * factor
    rhs = get_operator(degree1)(f, WI1)(x)
    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


# Kernel
@pytest.mark.parametrize('n, m', [(1, 1), (1, 2), (2, 2)])
def test_kernel_transform(n, m):
    wi = WI1 if m == 1 else WI2
    x = box_point(n, m, 4)
    g = random_group_element(n, m, 4)
    assert kernel_transform_residual(wi, g, x) < 1e-9
    with pytest.raises(sjo.errors.DimensionMismatch):
        weight_kernel(wi, n, m + 1)
