#
#   Determinant operators on the Siegel-Jacobi space of general degree
#   Copyright EAVISE
#

import logging
import math
import numpy as np

from ..calculus import TAU_INDEX
from ..errors import BadRowSelection, SingularIndex
from ..jet import Jet
from ..space import DifferentialMap
from ._base import register_operator, any_degree, K, NDEG

__all__ = ['D1_det', 'delta1_det', 'heat_det', 'heat_matrix', 'D2_det', 'delta2_det', 'select_rows', 'inverse_index']
log = logging.getLogger(__name__)

pi = math.pi


def select_rows(rows, n, m):
    """ Validate a selection of n different rows of W.

    Args:
        rows (list or None): 0-based rows; may only be omitted when m = n
        n (int): Degree
        m (int): Number of rows of W

    Returns:
        list: Sorted rows
    """
    if n > m:
        raise BadRowSelection(f'Determinant operators need n <= m [n={n}, m={m}]')
    if rows is None:
        if m != n:
            raise BadRowSelection(f'Select {n} of the {m} rows of W')
        return list(range(n))

    rows = [int(r) for r in rows]
    if len(rows) != n:
        raise BadRowSelection(f'Select exactly {n} rows [{rows}]')
    if len(set(rows)) != n:
        raise BadRowSelection(f'Rows should be different [{rows}]')
    if any(not 0 <= r < m for r in rows):
        raise BadRowSelection(f'Rows should lie in [0, {m}) [{rows}]')
    return sorted(rows)


def inverse_index(wi):
    """ Inverse of the index matrix, raising :class:`~sjo.errors.SingularIndex` when it does not exist. """
    d = np.linalg.det(wi.M)
    if abs(d) < TAU_INDEX:
        raise SingularIndex(f'Index matrix is singular [det {d:.3e}]')
    return np.linalg.inv(wi.M)


def _second_w(S, F, Minv):
    """ n x n matrix :math:`\\frac{\\partial}{\\partial W} M^{-1} (\\frac{\\partial F}{\\partial W})^t`, with entries :math:`\\sum_{ij} (M^{-1})_{ij} \\partial_{w_{ia}}\\partial_{w_{jb}} F`. """
    H = S.dW(S.dW(F))           # H[..., b, j, a, i] = d2F / dw_ia dw_jb
    return Jet.einsum('ij,...bjai->...ab', Minv, H)


def heat_matrix(S, F, Minv):
    """ Holomorphic heat matrix :math:`-8\\pi i \\frac{\\partial F}{\\partial Z} + \\frac{\\partial}{\\partial W} M^{-1} (\\frac{\\partial F}{\\partial W})^t`. """
    return S.dZ(F) * (-8j * pi) + _second_w(S, F, Minv)


@register_operator('D1_det', weight=NDEG*K+1, index_scale=NDEG)
def D1_det(f, wi, rows=None):
    """ Determinant of n rows of :math:`\\frac{\\partial f}{\\partial W} + 4\\pi i Y^{-1}V^tM f`.

    Args:
        f (sjo.space.SmoothMap): Function
        wi (sjo.space.WeightIndex): Weight and index
        rows (list, optional): n different rows of W (0-based); Default **all rows when m = n**

    Note:
        The matrix is n x m, with column j belonging to the row :math:`W_j`.
    """
    rows = select_rows(rows, f.n, f.m)
    M = wi.M

    def expression(S, F):
        E = S.dW(F) + (S.R @ S.V.T @ M) * F * (4j * pi)
        return E[:, rows].det()

    return DifferentialMap([f], expression, 1, name='D1_det')


@register_operator('delta1_det', weight=NDEG*K-1, index_scale=NDEG)
def delta1_det(f, wi, rows=None):
    """ Determinant of n rows of the m x n matrix :math:`(\\frac{\\partial f}{\\partial \\overline{W}})^t Y`. """
    rows = select_rows(rows, f.n, f.m)

    def expression(S, F):
        E = S.dWbar(F).T @ S.Y
        return E[rows, :].det()

    return DifferentialMap([f], expression, 1, name='delta1_det')


@register_operator('heat_det', weight=NDEG*K+2, index_scale=NDEG, order=2)
def heat_det(f, wi):
    """ Generalized heat operator

    .. math::
        \\det\\left(-8\\pi i \\frac{\\partial f}{\\partial Z} + \\frac{\\partial}{\\partial W} M^{-1} (\\frac{\\partial f}{\\partial W})^t - 4\\pi k f Y^{-1} + 2m\\pi f Y^{-1}\\right)

    Raises:
        SingularIndex: The index matrix is not invertible
    """
    Minv = inverse_index(wi)
    scale = 2 * f.m * pi - 4 * pi * wi.k

    def expression(S, F):
        return (heat_matrix(S, F, Minv) + F * S.R * scale).det()

    return DifferentialMap([f], expression, 2, name='heat_det')


@register_operator('D2_det', weight=NDEG*K+2, index_scale=NDEG)
def D2_det(f, wi, symmetric=True):
    """ Determinant of

    .. math::
        \\frac{\\partial f}{\\partial Z} - \\frac{ik}{2} Y^{-1} f + 2\\pi i Y^{-1}V^tMVY^{-1} f + \\frac{1}{2}(X + X^t),
        \\quad X = \\frac{\\partial f}{\\partial W} V Y^{-1}

    Args:
        f (sjo.space.SmoothMap): Function
        wi (sjo.space.WeightIndex): Weight and index
        symmetric (bool, optional): Symmetrize the cross term; Default **True**, False uses X as is
    """
    M = wi.M
    k = wi.k

    def expression(S, F):
        R, V = S.R, S.V
        X = S.dW(F) @ (V @ R)
        cross = (X + X.T) * 0.5 if symmetric else X
        A = S.dZ(F) + F * (R * (-0.5j * k) + (R @ V.T @ M @ V @ R) * (2j * pi)) + cross
        return A.det()

    return DifferentialMap([f], expression, 1, name='D2_det')


@register_operator('delta2_det', weight=NDEG*K-2, index_scale=NDEG)
def delta2_det(f, wi, symmetric=True):
    """ Determinant of :math:`Y \\frac{\\partial f}{\\partial \\overline{Z}} Y + \\frac{1}{2}(X + X^t)`, with :math:`X = Y \\frac{\\partial f}{\\partial \\overline{W}} V`.

    Args:
        f (sjo.space.SmoothMap): Function
        wi (sjo.space.WeightIndex): Weight and index
        symmetric (bool, optional): Symmetrize the cross term; Default **True**, False uses X as is
    """
    def expression(S, F):
        Y = S.Y
        X = Y @ S.dWbar(F) @ S.V
        cross = (X + X.T) * 0.5 if symmetric else X
        return (Y @ S.dZbar(F) @ Y + cross).det()

    return DifferentialMap([f], expression, 1, name='delta2_det')
