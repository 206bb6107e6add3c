#
#   Block matrices of the invariant metric
#   Copyright EAVISE
#

import logging
from collections import namedtuple
import numpy as np

from ..errors import DimensionMismatch
from ..jet import Jet
from ..space import index_sets
from ._params import MetricParams

__all__ = [
    'MetricBlocks', 'metric_blocks', 'metric_inverse_closed', 'metric_matrix', 'metric_inverse_matrix',
    'ds2', 'quadratic_form', 'holomorphic_order',
]
log = logging.getLogger(__name__)

MetricBlocks = namedtuple('MetricBlocks', ['W1', 'W2', 'W3'])
MetricBlocks.__doc__ = """ Blocks of the metric between holomorphic and antiholomorphic differentials.

Attributes:
    W1: :math:`|\\Omega| \\times |\\Omega|` block of :math:`dZ \\, d\\overline{Z}`
    W2: :math:`|\\Omega| \\times |\\Omega'|` block of :math:`dZ \\, d\\overline{W}`
    W3: :math:`|\\Omega'| \\times |\\Omega'|` block of :math:`dW \\, d\\overline{W}`
"""


def _indices(n, m):
    idx = index_sets(n, m)
    oi, oj = (np.array(a) for a in zip(*idx.omega))
    wr, wc = (np.array(a) for a in zip(*idx.omega_prime))
    return oi, oj, wr, wc


def _grid(matrix, rows, cols):
    """ Matrix with entry [I, J] equal to ``matrix[rows[I], cols[J]]``, for arrays and jets. """
    return matrix[rows[:, None], cols[None, :]]


def metric_blocks(x, params=MetricParams()):
    """ Blocks :math:`W_1, W_2, W_3` of the metric.

    With :math:`R = Y^{-1}`, :math:`S = RV^tVR`, :math:`I=(i,j), J=(r,s) \\in \\Omega` and :math:`I'=(i',j'), J'=(r',s') \\in \\Omega'`:

    .. math::
        W_1[I,J] &= 2^{-\\delta_{ij}-\\delta_{rs}} \\left\\{ A(R_{ir}R_{js} + R_{jr}R_{is}) + \\frac{B}{2}(S_{si}R_{jr} + S_{sj}R_{ir} + S_{ri}R_{js} + S_{rj}R_{is}) \\right\\} \\\\
        W_2[I,J'] &= -B \\, 2^{-1-\\delta_{ij}} \\left\\{ (VR)_{r'i}R_{js'} + (VR)_{r'j}R_{is'} \\right\\} \\\\
        W_3[I',J'] &= \\frac{B}{2} \\delta_{i'r'} R_{s'j'}

    Args:
        x (sjo.space.SiegelJacobiPoint or sjo.space.PointJet): Point; a point jet gives the blocks as jets
        params (sjo.metric.MetricParams, optional): Metric constants; Default **A=B=1**

    Returns:
        sjo.metric.MetricBlocks
    """
    A, B = params.A, params.B
    oi, oj, wr, wc = _indices(x.n, x.m)
    R, V = x.R, x.V
    S = R @ V.T @ V @ R
    VR = V @ R

    fz = 2.0 ** -(oi == oj).astype(float)
    W1 = (
        A * (_grid(R, oi, oi) * _grid(R, oj, oj) + _grid(R, oj, oi) * _grid(R, oi, oj))
        + (B / 2) * (
            _grid(S, oi, oj) * _grid(R, oj, oi) + _grid(S, oj, oj) * _grid(R, oi, oi)
            + _grid(S, oi, oi) * _grid(R, oj, oj) + _grid(S, oj, oi) * _grid(R, oi, oj)
        )
    ) * np.outer(fz, fz)

    W2 = (
        _grid(VR.T, oi, wr) * _grid(R, oj, wc) + _grid(VR.T, oj, wr) * _grid(R, oi, wc)
    ) * (-B / 2 * fz[:, None])

    W3 = _grid(R, wc, wc) * ((B / 2) * (wr[:, None] == wr[None, :]))

    return MetricBlocks(W1, W2, W3)


def metric_inverse_closed(x, params=MetricParams()):
    """ Closed form of the inverse of :math:`H = \\begin{pmatrix} W_1 & W_2 \\\\ W_2^t & W_3 \\end{pmatrix}`.

    .. math::
        M_1[I,J] &= \\frac{1}{A}(Y_{ir}Y_{js} + Y_{is}Y_{jr}) \\\\
        M_2[I,J'] &= \\frac{1}{A}(Y_{is'}V_{r'j} + Y_{js'}V_{r'i}) \\\\
        M_3[I',J'] &= \\frac{1}{A}(VY^{-1}V^t)_{i'r'}Y_{j's'} + \\frac{1}{A}V_{i's'}V_{r'j'} + \\frac{2}{B}\\delta_{i'r'}Y_{j's'}

    Returns:
        tuple: :math:`(M_1, M_2, M_3)`, arrays or jets like :func:`metric_blocks`
    """
    A, B = params.A, params.B
    oi, oj, wr, wc = _indices(x.n, x.m)
    Y, V = x.Y, x.V
    VRV = V @ x.R @ V.T

    M1 = (_grid(Y, oi, oi) * _grid(Y, oj, oj) + _grid(Y, oi, oj) * _grid(Y, oj, oi)) * (1 / A)
    M2 = (_grid(Y, oi, wc) * _grid(V.T, oj, wr) + _grid(Y, oj, wc) * _grid(V.T, oi, wr)) * (1 / A)
    M3 = (
        (_grid(VRV, wr, wr) * _grid(Y, wc, wc) + _grid(V, wr, wc).T * _grid(V, wr, wc)) * (1 / A)
        + _grid(Y, wc, wc) * ((2 / B) * (wr[:, None] == wr[None, :]))
    )
    return M1, M2, M3


def _block(rows):
    """ Assemble a block matrix of arrays or jets, with ``None`` for zero blocks. """
    jets = [b for row in rows for b in row if isinstance(b, Jet)]
    heights = [next(b.shape[0] for b in row if b is not None) for row in rows]
    widths = [next(row[c].shape[1] for row in rows if row[c] is not None) for c in range(len(rows[0]))]

    if not jets:
        return np.block([
            [np.zeros((h, w)) if b is None else b for b, w in zip(row, widths)]
            for row, h in zip(rows, heights)
        ])

    space = jets[0].space
    order = min(j.order for j in jets)
    size = space.size[order]

    def coef(b, h, w):
        if b is None:
            return np.zeros((h, w, size), dtype=complex)
        if isinstance(b, Jet):
            return b.coef[..., :size]
        out = np.zeros((h, w, size), dtype=complex)
        out[..., 0] = b
        return out

    return Jet(space, order, np.concatenate([
        np.concatenate([coef(b, h, w) for b, w in zip(row, widths)], axis=-2)
        for row, h in zip(rows, heights)
    ], axis=-3))


def holomorphic_order(n, m):
    """ Positions in :class:`~sjo.space.IndexSets` order of the coordinates :math:`(Z, W, \\overline{Z}, \\overline{W})`. """
    idx = index_sets(n, m)
    off = idx.offset
    return np.concatenate([
        np.arange(off['Z'], off['Z'] + idx.nz),
        np.arange(off['W'], off['W'] + idx.nw),
        np.arange(off['Zbar'], off['Zbar'] + idx.nz),
        np.arange(off['Wbar'], off['Wbar'] + idx.nw),
    ])


def metric_matrix(x, params=MetricParams()):
    """ Full metric matrix G over all complexified coordinates in :class:`~sjo.space.IndexSets` order,
    so that :math:`ds^2 = d\\xi^t G \\, d\\xi` with :math:`d\\xi = (dZ_\\Omega, d\\overline{Z}_\\Omega, dW_{\\Omega'}, d\\overline{W}_{\\Omega'})`.

    The non-zero blocks are :math:`G_{Z\\overline{Z}} = W_1`, :math:`G_{Z\\overline{W}} = W_2`,
    :math:`G_{W\\overline{Z}} = W_2^t`, :math:`G_{W\\overline{W}} = W_3` and their transposes.
    """
    W1, W2, W3 = metric_blocks(x, params)
    return _full(_block([[W1, W2], [W2.T, W3]]), x.n, x.m)


def metric_inverse_matrix(x, params=MetricParams()):
    """ Inverse of :func:`metric_matrix` from the closed form blocks. """
    M1, M2, M3 = metric_inverse_closed(x, params)
    return _full(_block([[M1, M2], [M2.T, M3]]), x.n, x.m)


def _full(H, n, m):
    full = _block([[None, H], [H.T, None]])
    perm = np.argsort(holomorphic_order(n, m))
    return full[perm[:, None], perm[None, :]]


def ds2(x, dZ, dW, params=MetricParams()):
    """ Squared length of a tangent vector.

    .. math::
        ds^2 = A \\, Tr(Y^{-1}dZ\\,Y^{-1}d\\overline{Z}) + B \\, Tr(Y^{-1}d\\Omega^t d\\overline{\\Omega}), \\qquad d\\Omega = dW - VY^{-1}dZ

    Args:
        x (sjo.space.SiegelJacobiPoint): Point
        dZ (array-like): Symmetric complex n x n tangent
        dW (array-like): Complex m x n tangent
        params (sjo.metric.MetricParams, optional): Metric constants

    Returns:
        float
    """
    dZ = np.asarray(dZ, dtype=complex)
    dW = np.asarray(dW, dtype=complex)
    if dZ.shape != (x.n, x.n) or dW.shape != (x.m, x.n):
        raise DimensionMismatch(f'Tangent shapes {dZ.shape}, {dW.shape} do not match H_{{{x.n},{x.m}}}')

    R = x.R
    dO = dW - x.V @ R @ dZ
    value = params.A * np.trace(R @ dZ @ R @ dZ.conj()) + params.B * np.trace(R @ dO.T @ dO.conj())
    return float(value.real)


def quadratic_form(x, dZ, dW, params=MetricParams()):
    """ Evaluate :math:`d\\xi^t G \\, d\\xi` from the metric blocks, which equals :func:`ds2`. """
    idx = index_sets(x.n, x.m)
    dZ = np.asarray(dZ, dtype=complex)
    dW = np.asarray(dW, dtype=complex)
    h = np.array([dZ[i, j] for i, j in idx.omega] + [dW[i, j] for i, j in idx.omega_prime])
    W1, W2, W3 = metric_blocks(x, params)
    H = np.block([[W1, W2], [W2.T, W3]])
    return float((2 * h @ H @ h.conj()).real)
