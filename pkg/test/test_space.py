#
#   Test the Siegel-Jacobi space, the Jacobi group and smooth maps
#   Copyright EAVISE
#

from fractions import Fraction
import pytest
import numpy as np
import sjo
from sjo.space import (
    SiegelJacobiPoint, PointJet, WeightIndex, Coordinate, JetMap, CoordinateMap, ConstantMap,
    index_sets, box_point, random_point, random_group_element, random_heisenberg,
    act, automorphy_factor, cocycle_phase, slash, compose, inverse, identity_element,
    translation, inversion, heisenberg, parse_complex, format_complex,
)

dims = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)]


# Points
def test_point_validation():
    with pytest.raises(sjo.errors.InvalidPoint):
        SiegelJacobiPoint([[1 - 1j]], [[0]])
    with pytest.raises(sjo.errors.InvalidPoint):
        SiegelJacobiPoint([[1j, 0.5], [0, 1j]], [[0, 0]])
    with pytest.raises(sjo.errors.InvalidPoint):
        SiegelJacobiPoint([[1j]], [[0, 0]])
    with pytest.raises(sjo.errors.InvalidPoint):
        SiegelJacobiPoint([[np.nan + 1j]], [[0]])


def test_point_readonly():
    x = box_point(2, 1, 0)
    with pytest.raises(ValueError):
        x.Z[0, 0] = 1j
    assert np.allclose(x.R @ x.Y, np.eye(2))


def test_point_json():
    x = box_point(2, 3, 4)
    y = SiegelJacobiPoint.from_json(x.to_json())
    assert x == y

    x = SiegelJacobiPoint.from_json({'z': 'i', 'w': '0.2'})
    assert x.z == 1j
    assert x.w == 0.2
    with pytest.raises(sjo.errors.InvalidPoint):
        SiegelJacobiPoint.from_json({'n': 1})


@pytest.mark.parametrize('text, value', [
    ('i', 1j),
    ('-i', -1j),
    ('3', 3),
    ('1.5-2i', 1.5 - 2j),
    ('-0.25+1e-3i', -0.25 + 1e-3j),
    ('2.5j', 2.5j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_format_complex():
    for value in (1 + 2j, -0.1 - 1e-17j, 1 / 3 + 0j):
        assert parse_complex(format_complex(value)) == value
    with pytest.raises(ValueError):
        parse_complex('one')


# Index sets
def test_index_sets():
    idx = index_sets(2, 3)
    assert idx.nz == 3
    assert idx.nw == 6
    assert idx.nvars == 18
    assert idx.position(Coordinate('Z', 1, 0)) == idx.position(Coordinate('Z', 0, 1)) == 1
    assert idx.position(Coordinate('W', 1, 0)) == 2 * 3 + 2
    assert idx.position(Coordinate('Wbar', 2, 1)) == 2 * 3 + 6 + 5
    for p in range(idx.nvars):
        assert idx.position(idx.coordinate(p)) == p
        assert idx.conjugate(idx.conjugate(p)) == p
    with pytest.raises(sjo.errors.IndexOutOfRange):
        idx.position(Coordinate('W', 3, 0))


# Weight and index
def test_weight_index():
    wi = WeightIndex(2, [[2, Fraction(1, 2)], [Fraction(1, 2), 1]])
    assert wi.m == 2
    assert wi.det == Fraction(7, 4)
    assert wi.with_weight(4).k == 4
    assert WeightIndex.from_json(wi.to_json()) == wi
    assert wi.scaled(2, 1).k == 5

    with pytest.raises(sjo.errors.InvalidWeightIndex):
        WeightIndex(2, [[1, 1], [0, 1]])
    with pytest.raises(sjo.errors.InvalidWeightIndex):
        WeightIndex(2, [[Fraction(1, 3)]])
    with pytest.raises(sjo.errors.InvalidWeightIndex):
        WeightIndex(1.5, [[1]])
    assert WeightIndex(2, [[Fraction(1, 3)]], validate=False).M[0, 0] == pytest.approx(1 / 3)


# Group
@pytest.mark.parametrize('n, m', dims)
def test_random_group_element(n, m):
    g = random_group_element(n, m, 7)
    assert g.is_integral()
    assert g.symplectic_residual() == 0
    assert random_group_element(n, m, 7, scale=0).is_identity()


@pytest.mark.parametrize('n, m', dims)
def test_compose_inverse(n, m):
    g = random_group_element(n, m, 1)
    assert compose(g, inverse(g)).allclose(identity_element(n, m))
    assert compose(inverse(g), g).allclose(identity_element(n, m))

    with pytest.raises(sjo.errors.InvalidGroupElement):
        compose(g, identity_element(n, m + 1))


@pytest.mark.parametrize('n, m', dims)
def test_action_is_compatible(n, m):
    x = box_point(n, m, 2)
    g1 = random_group_element(n, m, 3, scale=2)
    g2 = random_group_element(n, m, 4, scale=2)
    lhs = act(compose(g1, g2), x)
    rhs = act(g1, act(g2, x))
    assert lhs.distance(rhs) < 1e-10
    assert act(identity_element(n, m), x) == x


@pytest.mark.parametrize('n, m', dims)
def test_action_on_point_jet(n, m):
    x = box_point(n, m, 2)
    g = random_group_element(n, m, 3, scale=2)
    y = act(g, x)
    P = act(g, PointJet.seed(x, 1))
    assert (P.n, P.m) == (n, m)
    np.testing.assert_allclose(P.Z.value, y.Z, atol=1e-12)
    np.testing.assert_allclose(P.W.value, y.W, atol=1e-12)
    np.testing.assert_allclose(P.Zbar.value, y.Z.conj(), atol=1e-12)
    np.testing.assert_allclose(P.Wbar.value, y.W.conj(), atol=1e-12)


def test_action_on_point_jet_derivative():
    x = box_point(1, 1, 4)
    g = random_group_element(1, 1, 5, scale=2)
    P = act(g, PointJet.seed(x, 1))
    cz_d = g.C[0, 0] * x.Z[0, 0] + g.D[0, 0]
    w = index_sets(1, 1).offset['W']
    assert complex(P.W.diff(w).value[0, 0]) == pytest.approx(1 / cz_d)
    assert complex(P.Z.diff(w).value[0, 0]) == pytest.approx(0)


def test_group_validation():
    with pytest.raises(sjo.errors.InvalidGroupElement):
        sjo.space.JacobiGroupElement([[1]], [[1]], [[1]], [[1]], [[0]], [[0]], [[0]])
    g = inversion(1, 1)
    assert sjo.space.JacobiGroupElement.from_json(g.to_json()).allclose(g)


def test_automorphy_factor():
    x = box_point(1, 1, 5)
    wi = WeightIndex(3, [[2]])
    assert complex(automorphy_factor(identity_element(1, 1), x, wi)) == pytest.approx(1)
    assert complex(automorphy_factor(translation([[2]], 1), x, wi)) == pytest.approx(1)
    assert complex(automorphy_factor(inversion(1, 1), x, wi.with_weight(3))) == pytest.approx(
        x.z**3 * np.exp(2j * np.pi * 2 * x.w**2 / x.z)
    )

    # Heisenberg part without symplectic part
    lam = heisenberg([[1]], [[0]], [[0]])
    assert complex(automorphy_factor(lam, x, wi)) == pytest.approx(np.exp(-2j * np.pi * 2 * (x.z + 2 * x.w)))


@pytest.mark.parametrize('n, m', [(1, 1), (1, 2), (2, 2)])
def test_cocycle(n, m):
    wi = WeightIndex(2, np.eye(m, dtype=int).tolist())
    x = box_point(n, m, 0)
    g1 = random_group_element(n, m, 1)
    g2 = random_group_element(n, m, 2)
    phase = cocycle_phase(g1, g2, x, wi)
    assert abs(phase) == pytest.approx(1)
    assert cocycle_phase(g1, g2, box_point(n, m, 9), wi) == pytest.approx(phase)


def test_singular_factor():
    g = inversion(1, 1)
    x = SiegelJacobiPoint([[1e-14 + 1e-14j]], [[0]], tol_pd=0)
    with pytest.raises(sjo.errors.SingularFactor):
        act(g, x)


def test_sampling_reproducible():
    assert box_point(2, 2, 11) == box_point(2, 2, 11)
    assert random_point(2, 2, 11) == random_point(2, 2, 11)
    h = random_heisenberg(2, 2, 3)
    assert h.is_integral()
    assert np.array_equal(h.M, np.eye(4))


# Smooth maps
def test_partials_of_det():
    # The Z coordinates are the independent entries z_ij with i <= j
    x = box_point(2, 1, 0)
    f = JetMap(lambda P: P.Z.det(), 2, 1, holomorphic=True)
    assert f(x) == pytest.approx(np.linalg.det(x.Z))
    assert f.partial(x, [Coordinate('Z', 0, 1)]) == pytest.approx(-2 * x.Z[0, 1])
    assert f.partial(x, [Coordinate('Z', 0, 0)]) == pytest.approx(x.Z[1, 1])
    assert f.partial(x, [Coordinate('Z', 0, 0), Coordinate('Z', 1, 1)]) == pytest.approx(1)
    assert f.partial(x, [Coordinate('Zbar', 0, 0)]) == pytest.approx(0)


def test_partials_of_real_parts():
    x = box_point(1, 1, 0)
    y = JetMap(lambda P: P.Y[0, 0], 1, 1)
    assert y(x) == pytest.approx(x.Z[0, 0].imag)
    assert y.partial(x, [Coordinate('Z', 0, 0)]) == pytest.approx(-0.5j)
    assert y.partial(x, [Coordinate('Zbar', 0, 0)]) == pytest.approx(0.5j)


def test_coordinate_and_constant_maps():
    x = box_point(1, 2, 0)
    w = CoordinateMap(Coordinate('W', 1, 0), 1, 2)
    assert w(x) == pytest.approx(x.W[1, 0])
    assert w.partial(x, [Coordinate('W', 1, 0)]) == pytest.approx(1)
    assert w.partial(x, [Coordinate('W', 0, 0)]) == pytest.approx(0)

    c = ConstantMap(2 + 1j, 1, 2)
    assert c(x) == 2 + 1j
    assert (c * w)(x) == pytest.approx((2 + 1j) * x.W[1, 0])
    assert (w - w)(x) == 0


def test_map_dimension_check():
    f = ConstantMap(1, 1, 1)
    with pytest.raises(sjo.errors.DimensionMismatch):
        f(box_point(2, 1, 0))


def test_slash():
    wi = WeightIndex(2, [[1]])
    f = JetMap(lambda P: (P.Z * P.W).sum(), 1, 1, holomorphic=True)
    assert slash(f, identity_element(1, 1), wi) is f

    x = box_point(1, 1, 3)
    g = random_group_element(1, 1, 5)
    y = act(g, x)
    expected = f(y) / complex(automorphy_factor(g, x, wi))
    assert slash(f, g, wi)(x) == pytest.approx(expected)

    # Slashing twice follows the cocycle up to its constant phase
    g2 = random_group_element(1, 1, 6)
    phase = cocycle_phase(g, g2, x, wi)
    lhs = slash(slash(f, g, wi), g2, wi)(x)
    rhs = slash(f, compose(g, g2), wi)(x) * phase
    assert lhs == pytest.approx(rhs)
