#
#   Test the matrix gradients, the finite difference oracle and the kernel identities
#   Copyright EAVISE
#

import math
import pytest
import numpy as np
import sympy
import sjo
from sjo.space import Coordinate, JetMap, WeightIndex, box_point
from sjo.calculus import (
    ExpPolyTestFunction, grad, fd_oracle, grad_trace_MVRV_W, grad_trace_MVRV_Z, grad_R_Z,
    grad_detY_Z, grad_log_kernel, kernel_map, hessian_W_kernel, cofactor, cofactor_trace_identity_check,
)

dims = [(1, 1), (1, 2), (2, 1), (2, 2)]


def index_matrix(m):
    M = np.full((m, m), 0.5)
    np.fill_diagonal(M, 2)
    return M


@pytest.mark.parametrize('n, m', dims)
def test_grad_trace(n, m):
    x = box_point(n, m, 1)
    M = index_matrix(m)
    f = JetMap(lambda P: (M @ P.V @ P.R @ P.V.T).trace(), n, m)
    g = grad(f, x)
    assert np.allclose(g.dW, grad_trace_MVRV_W(x, M))
    assert np.allclose(g.dZ, grad_trace_MVRV_Z(x, M))


@pytest.mark.parametrize('n', [1, 2, 3])
def test_grad_detY(n):
    x = box_point(n, 1, 2)
    f = JetMap(lambda P: P.Y.det(), n, 1)
    assert np.allclose(grad(f, x).dZ, grad_detY_Z(x))


def test_grad_R():
    x = box_point(2, 1, 3)
    d = grad_R_Z(x)
    for s in range(2):
        for t in range(2):
            f = JetMap(lambda P: P.R[s, t], 2, 1)
            for k, l in ((0, 0), (0, 1), (1, 1)):
                assert d[s, t, k, l] == pytest.approx(f.partial(x, [Coordinate('Z', k, l)]))


@pytest.mark.parametrize('n, m', dims)
def test_grad_log_kernel(n, m):
    x = box_point(n, m, 4)
    wi = WeightIndex(3, np.eye(m, dtype=int).tolist())
    h1 = kernel_map(wi, n)
    g = grad(h1, x)
    dZ, dW = grad_log_kernel(x, wi)
    assert np.allclose(g.dZ / h1(x), dZ)
    assert np.allclose(g.dW / h1(x), dW)


def test_differential():
    x = box_point(2, 2, 0)
    f = ExpPolyTestFunction.random(2, 2, 0, holomorphic=True)
    g = grad(f, x)
    dZ = np.array([[1, 0.5], [0.5, 0]])
    dW = np.zeros((2, 2))
    # Tr(dZ G) only sees z00 once and the symmetric pair z01 with weight 1/2
    expected = f.partial(x, [Coordinate('Z', 0, 0)]) + 0.5 * f.partial(x, [Coordinate('Z', 0, 1)])
    assert g.differential(dZ, dW) == pytest.approx(expected)


def test_holomorphic_test_function():
    x = box_point(2, 1, 0)
    f = ExpPolyTestFunction.random(2, 1, 3, holomorphic=True)
    assert f.holomorphic
    assert f.partial(x, [Coordinate('Zbar', 0, 1)]) == pytest.approx(0)
    assert f.partial(x, [Coordinate('Wbar', 0, 0), Coordinate('W', 0, 1)]) == pytest.approx(0)
    assert not ExpPolyTestFunction.random(2, 1, 3).holomorphic


@pytest.mark.parametrize('index', [
    [Coordinate('Z', 0, 0)],
    [Coordinate('Zbar', 0, 1)],
    [Coordinate('W', 1, 0)],
    [Coordinate('Wbar', 0, 1)],
    [Coordinate('Z', 0, 1), Coordinate('W', 0, 0)],
    [Coordinate('W', 1, 1), Coordinate('Wbar', 0, 1)],
])
def test_fd_oracle(index):
    x = box_point(2, 2, 5)
    f = ExpPolyTestFunction.random(2, 2, 5)
    exact = f.partial(x, index)
    estimate = fd_oracle(f, x, index)
    assert estimate.value == pytest.approx(exact, rel=1e-5, abs=1e-7)
    assert estimate.error < 1e-4 * max(1, abs(exact))


def test_fd_oracle_errors():
    x = box_point(1, 1, 0)
    f = ExpPolyTestFunction.random(1, 1, 0)
    assert fd_oracle(f, x, []).value == pytest.approx(f(x))
    with pytest.raises(sjo.errors.StepUnderflow):
        fd_oracle(f, x, [Coordinate('Z', 0, 0)], step=1e-8)
    with pytest.raises(sjo.errors.OrderTooLow):
        fd_oracle(f, x, [Coordinate('Z', 0, 0)] * 5)


@pytest.mark.parametrize('n, m', [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_hessian_W_kernel(n, m):
    x = box_point(n, m, 6)
    wi = WeightIndex(2, index_matrix(m).tolist())
    f = ExpPolyTestFunction.random(n, m, 6)
    h1 = kernel_map(wi, n)
    fh = f * h1
    scale = h1(x)

    for i in range(m):
        for j in range(m):
            H = hessian_W_kernel(f, x, wi, i, j)
            for k in range(n):
                for l in range(n):
                    expected = fh.partial(x, [Coordinate('W', j, k), Coordinate('W', i, l)]) / scale
                    assert H[k, l] == pytest.approx(expected, rel=1e-8, abs=1e-10)

    with pytest.raises(sjo.errors.IndexOutOfRange):
        hessian_W_kernel(f, x, wi, m, 0)


def test_cofactor():
    assert cofactor([[2, 1], [1, 3]]) == sympy.Matrix([[3, -1], [-1, 2]])
    assert cofactor([[5]]) == sympy.Matrix([[1]])

    M = sympy.Matrix([[2, sympy.Rational(1, 2), 0], [sympy.Rational(1, 2), 1, 1], [0, 1, 3]])
    assert M * cofactor(M).T == M.det() * sympy.eye(3)

    wi = WeightIndex(1, [[1, sympy.Rational(1, 2)], [sympy.Rational(1, 2), 1]])
    assert cofactor(wi) == sympy.Matrix([[1, -sympy.Rational(1, 2)], [-sympy.Rational(1, 2), 1]])

    with pytest.raises(sjo.errors.DimensionMismatch):
        cofactor([[1, 2, 3], [4, 5, 6]])


@pytest.mark.parametrize('n, m', [(1, 2), (2, 2), (2, 3)])
def test_cofactor_trace_identity(n, m):
    x = box_point(n, m, 7)
    f = ExpPolyTestFunction.random(n, m, 7)
    assert cofactor_trace_identity_check(f, x, index_matrix(m), seed=1) < 1e-8

    with pytest.raises(sjo.errors.SingularIndex):
        cofactor_trace_identity_check(f, x, np.ones((m, m)))


def test_kernel_value():
    x = box_point(1, 1, 8)
    wi = WeightIndex(2, [[3]])
    expected = x.Z[0, 0].imag**2 * math.exp(-4 * math.pi * 3 * x.W[0, 0].imag**2 / x.Z[0, 0].imag)
    assert kernel_map(wi, 1)(x) == pytest.approx(expected)
