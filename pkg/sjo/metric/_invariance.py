#
#   Invariance and compatibility checks of the metric
#   Copyright EAVISE
#

import logging
import numpy as np

from ..space import PointJet, act, cotangent_transforms, rng
from ._blocks import ds2, metric_matrix
from ._connection import connection_closed
from ._params import MetricParams

__all__ = ['random_tangent', 'metric_invariance_residual', 'metric_compatibility_residual']
log = logging.getLogger(__name__)


def random_tangent(n, m, seed):
    """ Random complex tangent vector ``(dZ, dW)`` with symmetric dZ. """
    gen = rng(seed)
    dZ = gen.normal(size=(n, n)) + 1j * gen.normal(size=(n, n))
    dW = gen.normal(size=(m, n)) + 1j * gen.normal(size=(m, n))
    return (dZ + dZ.T) / 2, dW


def metric_invariance_residual(x, g, params=MetricParams(), frame=8, seed=0):
    """ Compare :math:`ds^2` at x with its value at :math:`g \\cdot x` on the pushed forward tangent vectors.

    Args:
        x (sjo.space.SiegelJacobiPoint): Point
        g (sjo.space.JacobiGroupElement): Group element
        params (sjo.metric.MetricParams, optional): Metric constants
        frame (int, optional): Number of random tangent vectors; Default **8**
        seed (int, optional): Seed of the tangent vectors; Default **0**

    Returns:
        float: Largest :math:`|ds^2(gx, g_*t) - ds^2(x, t)| / (1 + |ds^2(x, t)|)`
    """
    T = cotangent_transforms(g, x)
    y = act(g, x)
    gen = rng(seed)
    worst = 0.0
    for _ in range(frame):
        dZ, dW = random_tangent(x.n, x.m, gen)
        before = ds2(x, dZ, dW, params)
        after = ds2(y, *T(dZ, dW), params)
        worst = max(worst, abs(after - before) / (1 + abs(before)))
    return worst


def metric_compatibility_residual(x, params=MetricParams()):
    """ Max-norm of :math:`\\nabla_C G_{AB} = \\partial_C G_{AB} - \\Gamma^K_{CA}G_{KB} - \\Gamma^K_{CB}G_{AK}`,
    with the closed form connection.
    """
    G = metric_matrix(PointJet.seed(x, 1), params)
    G0 = G.value
    dG = G.coef[..., 1:]
    gamma = connection_closed(x, params).gamma
    nabla = dG - np.einsum('kca,kb->abc', gamma, G0) - np.einsum('kcb,ak->abc', gamma, G0)
    return float(np.max(np.abs(nabla)))
