#
#   Test the invariant differential operators
#   Copyright EAVISE
#

import pytest
import numpy as np
import sjo
from sjo.space import WeightIndex, box_point, random_group_element
from sjo.calculus import ExpPolyTestFunction
from sjo.operators import InvariantOperator, build_invariant, get_operator, H_j, T_kl, U_kl, V_kl, YmYp
from sjo.verify import check_invariance


def test_H1():
    report = check_invariance(lambda n, m: H_j(1, n, m), 1, 1, samples=3, timing=False)
    assert report.passed, report
    assert report.claim == 'inv-H1'

    report = check_invariance(H_j(1, 1, 1), 1, 1, samples=2, constant=True, timing=False)
    assert report.passed, report


@pytest.mark.parametrize('name, k', [
    ('Y+', None),
    ('Y-', None),
    ('Y+k', 1),
    ('Y-k', 1),
    ('X+', None),
    ('X-', None),
    ('K', None),
    ('Lambda', None),
    ('Y-Y+', None),
])
def test_laws(name, k):
    n, m = 1, 2
    inv = build_invariant(name, n, m, k)
    x = box_point(n, m, 1)
    g = random_group_element(n, m, 1)
    f = ExpPolyTestFunction.random(n, m, 1)
    assert inv.law_residual(f, g, x) < 1e-7


@pytest.mark.parametrize('inv', [
    YmYp(0, 1, 1, 2),
    T_kl(1, 0, 1, 1, 2),
    U_kl(1, 0, 1, 2),
    V_kl(0, 1, 1, 2),
])
def test_scalar_invariants(inv):
    assert inv.scalar
    report = check_invariance(inv, 1, 2, samples=2, timing=False)
    assert report.passed, report


@pytest.mark.slow
def test_H2():
    report = check_invariance(H_j(2, 1, 1), 1, 1, samples=2, timing=False)
    assert report.passed, report


def test_shapes():
    assert build_invariant('Y+', 2, 3).shape == (2, 3)
    assert build_invariant('Y-', 2, 3).shape == (3, 2)
    assert build_invariant('Y+k', 2, 3, 0).shape == (2, 1)
    assert build_invariant('X+', 2, 3).shape == (2, 2)
    assert build_invariant('Y-Y+', 2, 3).order == 2

    H = H_j(1, 2, 3)
    assert H.scalar
    assert H.order == 2
    assert H_j(2, 1, 1).order == 4
    assert T_kl(1, 0, 0, 1, 1).order == 4
    assert U_kl(0, 0, 1, 1).order == 3


def test_errors():
    with pytest.raises(sjo.errors.ConfigError):
        build_invariant('Z+', 1, 1)
    with pytest.raises(sjo.errors.IndexOutOfRange):
        build_invariant('Y+k', 1, 2)
    with pytest.raises(sjo.errors.IndexOutOfRange):
        build_invariant('Y-k', 1, 2, 2)
    with pytest.raises(sjo.errors.ConfigError):
        InvariantOperator('bad', build_invariant('Y+', 1, 1).matrix, ('Q', 'P'))
    with pytest.raises(sjo.errors.ConfigError):
        H_j(0, 1, 1)
    with pytest.raises(sjo.errors.IndexOutOfRange):
        YmYp(0, 2, 1, 2)


def test_not_invariant():
    op = build_invariant('Y+', 2, 2)
    report = check_invariance(InvariantOperator('Y+ as invariant', op.matrix), 2, 2, samples=3, negative=True, timing=False)
    assert report.passed
    assert report.max_residual > 1e-2


def test_registry_operator():
    n, m = 1, 2
    x = box_point(n, m, 2)
    f = ExpPolyTestFunction.random(n, m, 2)
    wi = WeightIndex(0, np.zeros((m, m), dtype=int).tolist())
    assert get_operator('H_j')(f, wi)(x) == pytest.approx(H_j(1, n, m).apply(f)(x))
    assert get_operator('YmYp')(f, wi, k=1, l=0)(x) == pytest.approx(YmYp(1, 0, n, m)(f)(x))
