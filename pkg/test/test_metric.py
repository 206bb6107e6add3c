#
#   Test the invariant metric and its connection
#   Copyright EAVISE
#

import io
import pytest
import numpy as np
import pandas as pd
import sjo
from sjo.space import SiegelJacobiPoint, box_point, random_group_element
from sjo.metric import (
    MetricParams, ConnectionData, metric_matrix, metric_inverse_matrix, ds2, quadratic_form, random_tangent,
    connection_closed, christoffel_numeric, metric_invariance_residual, metric_compatibility_residual, CSV_COLUMNS,
)

dims = [(1, 1), (1, 2), (2, 1), (2, 2)]
params = [MetricParams(), MetricParams(2, 0.5)]


def test_params():
    assert MetricParams().A == MetricParams().B == 1
    with pytest.raises(sjo.errors.ConfigError):
        MetricParams(0, 1)
    with pytest.raises(sjo.errors.ConfigError):
        MetricParams(1, -2)


@pytest.mark.parametrize('n, m', dims + [(2, 3)])
@pytest.mark.parametrize('p', params)
def test_quadratic_form(n, m, p):
    x = box_point(n, m, 1)
    for seed in range(3):
        dZ, dW = random_tangent(n, m, seed)
        value = ds2(x, dZ, dW, p)
        assert value > 0
        assert quadratic_form(x, dZ, dW, p) == pytest.approx(value, rel=1e-10)

    with pytest.raises(sjo.errors.DimensionMismatch):
        ds2(x, np.eye(n + 1), np.zeros((m, n)), p)


@pytest.mark.parametrize('n, m', dims)
@pytest.mark.parametrize('p', params)
def test_metric_inverse(n, m, p):
    x = box_point(n, m, 2)
    G = metric_matrix(x, p)
    assert np.allclose(G, G.T)
    assert np.max(np.abs(G @ metric_inverse_matrix(x, p) - np.eye(G.shape[0]))) < 1e-10


@pytest.mark.parametrize('n, m', dims)
@pytest.mark.parametrize('p', params)
def test_connection(n, m, p):
    x = box_point(n, m, 3)
    closed = connection_closed(x, p)
    numeric = christoffel_numeric(x, p)
    assert closed.max_difference(numeric) < 1e-9
    assert closed.torsion() == 0
    assert numeric.torsion() < 1e-12
    assert numeric.max_difference(christoffel_numeric(x, p, inverse='numeric')) < 1e-9


def test_connection_differs_for_other_params():
    x = box_point(1, 1, 4)
    closed = connection_closed(x, MetricParams(1, 1))
    numeric = christoffel_numeric(x, MetricParams(1, 2))
    assert closed.max_difference(numeric) > 1e-2


@pytest.mark.parametrize('p', params)
def test_connection_explicit(p):
    x = box_point(1, 1, 5)
    assert connection_closed(x, p, 'general').max_difference(connection_closed(x, p, 'explicit')) < 1e-12


def test_coefficients():
    # With real w the connection only depends on y
    x = SiegelJacobiPoint([[0.3 + 2j]], [[0.4]])
    p = MetricParams(1, 3)
    coef = connection_closed(x, p, 'explicit').coefficients()
    assert coef['Gamma1'] == pytest.approx(0.5j)
    assert coef['Gamma2'] == pytest.approx(0)
    assert coef['Gamma3'] == pytest.approx(1.5j)
    assert coef["Gamma1'"] == pytest.approx(0)
    assert coef["Gamma2'"] == pytest.approx(0.5j)
    assert coef["Gamma3'"] == pytest.approx(0)

    general = connection_closed(x, p).coefficients()
    for key, value in coef.items():
        assert general[key] == pytest.approx(value, abs=1e-12)


def test_connection_errors():
    x = box_point(1, 2, 0)
    with pytest.raises(sjo.errors.DimensionMismatch):
        connection_closed(x, form='explicit')
    with pytest.raises(sjo.errors.DimensionMismatch):
        connection_closed(x).coefficients()
    with pytest.raises(sjo.errors.ConfigError):
        connection_closed(x, form='display')
    with pytest.raises(sjo.errors.ConfigError):
        christoffel_numeric(x, inverse='pseudo')
    with pytest.raises(sjo.errors.DimensionMismatch):
        ConnectionData(1, 1, np.zeros((3, 3, 3)))
    with pytest.raises(sjo.errors.DimensionMismatch):
        connection_closed(x).max_difference(connection_closed(box_point(1, 1, 0)))


def test_sparse_views():
    x = box_point(1, 1, 6)
    gamma = connection_closed(x)
    items = list(gamma.items())
    assert all(i <= j for _, i, j, _ in items)
    assert len(items) == len(list(gamma.items(tol=0.0)))
    k, i, j, value = items[0]
    assert gamma[k, i, j] == value

    frame = pd.read_csv(io.StringIO(gamma.to_csv()))
    assert list(frame.columns) == CSV_COLUMNS
    assert len(frame) == len(items)
    assert np.allclose(frame['re'] + 1j * frame['im'], [v for *_, v in items], rtol=1e-15)


def test_csv_file(tmp_path):
    gamma = connection_closed(box_point(2, 1, 7))
    path = tmp_path / 'gamma.csv'
    gamma.to_csv(path)
    frame = pd.read_csv(path)
    assert frame[['K_index', 'I_index', 'J_index']].max().max() < gamma.index_sets.nvars


@pytest.mark.parametrize('n, m', [(1, 1), (2, 2), (3, 1)])
@pytest.mark.parametrize('p', params)
def test_metric_invariance(n, m, p):
    x = box_point(n, m, 8)
    g = random_group_element(n, m, 8)
    assert metric_invariance_residual(x, g, p, seed=1) < 1e-9


@pytest.mark.parametrize('n, m', dims)
def test_metric_compatibility(n, m):
    x = box_point(n, m, 9)
    assert metric_compatibility_residual(x, MetricParams(1.5, 0.7)) < 1e-9
