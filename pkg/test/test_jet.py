#
#   Test the truncated Taylor arithmetic
#   Copyright EAVISE
#

import math
import threading
from concurrent.futures import ThreadPoolExecutor
import pytest
import numpy as np
import sjo
from sjo.jet import Jet, JetSpace, jet_space


@pytest.fixture(scope='module')
def xy():
    """ Variables x and y of order 4, expanded around (0.3, -0.2) """
    space = jet_space(2)
    return Jet.variable(space, 4, 0, 0.3), Jet.variable(space, 4, 1, -0.2)


def test_space_tables():
    space = jet_space(3)
    space.grow(2)
    assert space.size[:3] == [1, 4, 10]
    assert space.index((0, 0, 0)) == 0
    assert space.index((1, 0, 0)) == 1
    assert sorted(space.degree[:10]) == list(space.degree[:10])
    with pytest.raises(sjo.errors.IndexOutOfRange):
        space.index((1, 0))


def test_jet_space_cache():
    assert jet_space(5) is jet_space(5)


def test_space_grows_while_read():
    reference = JetSpace(4)
    reference.grow(1)
    expected = [reference.diff_table(v, 1) for v in range(4)]
    expected_pairs = reference.pairs(1)

    for _ in range(5):
        space = JetSpace(4)
        space.grow(1)
        done = threading.Event()

        def grow():
            try:
                space.grow(6)
            finally:
                done.set()

        def read():
            while True:
                finished = done.is_set()
                for v in range(4):
                    for table, ref in zip(space.diff_table(v, 1), expected[v]):
                        assert np.array_equal(table, ref)
                for table, ref in zip(space.pairs(1), expected_pairs):
                    assert np.array_equal(table, ref)
                if finished:
                    return

        with ThreadPoolExecutor(3) as pool:
            futures = [pool.submit(read), pool.submit(read), pool.submit(grow)]
            for future in futures:
                future.result()
        assert space.order == 6


def test_product_derivatives(xy):
    x, y = xy
    f = x * x * y
    assert f.value == pytest.approx(0.3**2 * -0.2)
    assert f.derivative((1, 0)) == pytest.approx(2 * 0.3 * -0.2)
    assert f.derivative((2, 1)) == pytest.approx(2)
    assert f.derivative((0, 2)) == pytest.approx(0)


def test_exp_log(xy):
    x, y = xy
    f = (x * y).exp()
    # d^2/dx dy exp(xy) = (1 + xy) exp(xy)
    assert f.derivative((1, 1)) == pytest.approx((1 + 0.3 * -0.2) * math.exp(0.3 * -0.2))

    g = (x + 2).log()
    assert g.derivative((3, 0)) == pytest.approx(2 / 2.3**3)


def test_power(xy):
    x, _ = xy
    f = (x + 1).power(2.5)
    assert f.derivative((2, 0)) == pytest.approx(2.5 * 1.5 * 1.3**0.5)
    assert (x + 1).power(-2).derivative((1, 0)) == pytest.approx(-2 / 1.3**3)
    assert (x + 1).power(3).value == pytest.approx(1.3**3)


def test_division(xy):
    x, y = xy
    f = x / (y + 1)
    assert f.derivative((1, 1)) == pytest.approx(-1 / 0.8**2)


def test_diff_lowers_order(xy):
    x, y = xy
    f = x * x * x * y
    d = f.diff(0)
    assert d.order == 3
    assert d.value == pytest.approx(3 * 0.3**2 * -0.2)
    with pytest.raises(sjo.errors.OrderTooLow):
        Jet.constant(jet_space(2), 0, 1).diff(0)


def test_truncate(xy):
    x, _ = xy
    f = (x * x).truncate(1)
    assert f.order == 1
    with pytest.raises(sjo.errors.OrderTooLow):
        f.truncate(2)
    with pytest.raises(sjo.errors.OrderTooLow):
        f.derivative((2, 0))


def test_matrix_inverse_det():
    space = jet_space(1)
    t = Jet.variable(space, 3, 0, 0.5)
    A = Jet.stack([Jet.stack([t + 2, t * t]), Jet.stack([t * 0 + 1, t + 3])])
    assert A.shape == (2, 2)

    # det = (t+2)(t+3) - t^2 = 5t + 6
    d = A.det()
    assert d.value == pytest.approx(8.5)
    assert d.derivative((1,)) == pytest.approx(5)
    assert d.derivative((2,)) == pytest.approx(0)

    I = A @ A.inv()
    assert np.allclose(I.value, np.eye(2))
    assert np.allclose(I.diff(0).value, 0)


def test_einsum_matches_matmul():
    space = jet_space(2)
    gen = np.random.default_rng(3)
    A = Jet(space, 2, gen.normal(size=(2, 3, space.size[2])))
    B = Jet(space, 2, gen.normal(size=(3, 2, space.size[2])))
    C = Jet.einsum('ik,kj->ij', A, B)
    assert np.allclose(C.coef, (A @ B).coef)
    assert np.allclose(Jet.einsum('ii->', C).coef, C.trace().coef)


def test_numpy_dispatch():
    space = jet_space(1)
    t = Jet.variable(space, 2, 0, 1.0)
    M = np.array([[1.0, 2.0], [3.0, 4.0]])
    scaled = M * t
    assert isinstance(scaled, Jet)
    assert np.allclose(scaled.value, M)


def test_substitute():
    # f(u) = u^2 with u = 2s + s^2, so f = 4s^2 + ...
    outer = jet_space(1)
    inner = jet_space(1)
    u = Jet.variable(outer, 3, 0, 1.0)
    f = u * u
    s = Jet.variable(inner, 3, 0, 0.0)
    g = f.substitute([s * 2 + s * s])
    assert g.value == pytest.approx(1)
    assert g.derivative((1,)) == pytest.approx(4)
    # f = (1 + 2s + s^2)^2 = (1+s)^4
    assert g.derivative((2,)) == pytest.approx(12)
    assert g.derivative((3,)) == pytest.approx(24)


def test_mismatched_spaces():
    a = Jet.variable(jet_space(1), 1, 0)
    b = Jet.variable(jet_space(2), 1, 0)
    with pytest.raises(sjo.errors.DimensionMismatch):
        a + b
