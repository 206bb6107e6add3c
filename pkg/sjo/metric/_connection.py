#
#   Levi-Civita connection of the invariant metric
#   Copyright EAVISE
#

import logging
import numpy as np
import pandas as pd

from ..errors import DimensionMismatch, ConfigError
from ..space import PointJet, index_sets
from ._blocks import metric_matrix, metric_inverse_matrix, holomorphic_order
from ._params import MetricParams

__all__ = ['ConnectionData', 'christoffel_numeric', 'connection_closed', 'CSV_COLUMNS']
log = logging.getLogger(__name__)

CSV_COLUMNS = ['K_index', 'I_index', 'J_index', 're', 'im']


class ConnectionData:
    """ Christoffel symbols :math:`\\Gamma^K_{IJ}` over the complexified coordinates.

    The connection acts on differentials as :math:`D(d\\xi_K) = \\sum_{I,J} \\Gamma^K_{IJ} d\\xi_I d\\xi_J`,
    with every index a position in :class:`~sjo.space.IndexSets` order (0-based).

    Args:
        n, m (int): Dimensions
        gamma (numpy.ndarray): Dense tensor ``gamma[K, I, J]``
        source (str, optional): How the symbols were computed; Default **''**

    Note:
        The symbols are symmetric in the lower indices, so the sparse views only list ``I <= J``.
    """
    def __init__(self, n, m, gamma, source=''):
        idx = index_sets(n, m)
        gamma = np.asarray(gamma, dtype=complex)
        if gamma.shape != (idx.nvars,) * 3:
            raise DimensionMismatch(f'Christoffel tensor for H_{{{n},{m}}} needs shape {(idx.nvars,) * 3} [{gamma.shape}]')
        self.n = n
        self.m = m
        self.gamma = gamma
        self.source = source

    def __repr__(self):
        return f'{self.__class__.__name__}(n={self.n}, m={self.m}, source={self.source!r})'

    @property
    def index_sets(self):
        return index_sets(self.n, self.m)

    def __getitem__(self, key):
        """ Symbol for a ``(K, I, J)`` triple of positions or :class:`~sjo.space.Coordinate` tuples. """
        idx = self.index_sets
        pos = [idx.position(k) if isinstance(k, tuple) else int(k) for k in key]
        return complex(self.gamma[tuple(pos)])

    def items(self, tol=0.0):
        """ Iterate over ``(K, I, J, value)`` with ``I <= J`` and ``|value| > tol``, ordered by K, I, J. """
        K, I, J = np.nonzero(np.abs(self.gamma) > tol)
        for k, i, j in zip(K, I, J):
            if i <= j:
                yield int(k), int(i), int(j), complex(self.gamma[k, i, j])

    def to_frame(self, tol=0.0):
        """ Sparse symbols as a :class:`pandas.DataFrame` with columns ``K_index, I_index, J_index, re, im``. """
        rows = [(k, i, j, v.real, v.imag) for k, i, j, v in self.items(tol)]
        return pd.DataFrame(rows, columns=CSV_COLUMNS)

    def to_csv(self, path_or_buf=None, tol=0.0):
        """ Write the sparse symbols as CSV, returning the text when no path is given. """
        return self.to_frame(tol).to_csv(path_or_buf, index=False, float_format='%.17g')

    def max_difference(self, other):
        """ Max-norm difference with another set of symbols on the same space. """
        if (self.n, self.m) != (other.n, other.m):
            raise DimensionMismatch(f'Cannot compare connections on H_{{{self.n},{self.m}}} and H_{{{other.n},{other.m}}}')
        return float(np.max(np.abs(self.gamma - other.gamma)))

    def torsion(self):
        """ Max-norm of :math:`\\Gamma^K_{IJ} - \\Gamma^K_{JI}`. """
        return float(np.max(np.abs(self.gamma - self.gamma.swapaxes(1, 2))))

    def coefficients(self):
        """ Coefficients of :math:`D(dz) = \\Gamma_1 dz^2 + \\Gamma_2 dzdw + \\Gamma_3 dw^2` and
        :math:`D(dw) = \\Gamma_1' dz^2 + \\Gamma_2' dzdw + \\Gamma_3' dw^2` on :math:`\\mathbb{H}_{1,1}`.

        Returns:
            dict: Keys ``Gamma1, Gamma2, Gamma3, Gamma1', Gamma2', Gamma3'``
        """
        if (self.n, self.m) != (1, 1):
            raise DimensionMismatch(f'Coefficient matrices only exist for n=m=1 [{self.n}, {self.m}]')
        z, w = 0, 2
        out = {}
        for K, suffix in ((z, ''), (w, "'")):
            out['Gamma1' + suffix] = complex(self.gamma[K, z, z])
            out['Gamma2' + suffix] = complex(2 * self.gamma[K, z, w])
            out['Gamma3' + suffix] = complex(self.gamma[K, w, w])
        return out


def christoffel_numeric(x, params=MetricParams(), inverse='closed'):
    """ Christoffel symbols from the Levi-Civita formula

    .. math::
        \\Gamma^K_{IJ} = \\frac{1}{2} \\sum_L G^{KL} \\left( \\partial_I G_{JL} + \\partial_J G_{IL} - \\partial_L G_{IJ} \\right)

    applied to the full metric matrix over the complexified coordinates.
    The partials of G are exact, taken from a first order jet of the metric.

    Args:
        x (sjo.space.SiegelJacobiPoint): Point
        params (sjo.metric.MetricParams, optional): Metric constants
        inverse (str, optional): ``'closed'`` to use :func:`~sjo.metric.metric_inverse_matrix`, ``'numeric'`` to invert G; Default **'closed'**

    Returns:
        sjo.metric.ConnectionData
    """
    G = metric_matrix(PointJet.seed(x, 1), params)
    dG = G.coef[..., 1:]                        # dG[a, b, c] = d G_ab / d xi_c

    if inverse == 'closed':
        Ginv = metric_inverse_matrix(x, params)
    elif inverse == 'numeric':
        Ginv = np.linalg.inv(G.value)
    else:
        raise ConfigError(f'Unknown inverse method "{inverse}", should be one of [closed, numeric]')

    first = np.einsum('kl,jli->kij', Ginv, dG)
    gamma = 0.5 * (first + first.swapaxes(1, 2) - np.einsum('kl,ijl->kij', Ginv, dG))
    return ConnectionData(x.n, x.m, gamma, source=f'numeric-{inverse}')


def _unit_tangents(n, m):
    """ Holomorphic unit tangents, one per coordinate of :math:`(Z_\\Omega, W_{\\Omega'})`. """
    idx = index_sets(n, m)
    dZ = np.zeros((idx.nhol, n, n))
    dW = np.zeros((idx.nhol, m, n))
    for a, (i, j) in enumerate(idx.omega):
        dZ[a, i, j] = dZ[a, j, i] = 1
    for a, (i, j) in enumerate(idx.omega_prime):
        dW[idx.nz + a, i, j] = 1
    return dZ, dW


def _bilinear_general(x, params):
    """ Holomorphic symbols from the bilinear forms of :math:`D(dZ)` and :math:`D(dW)`. """
    A, B = params.A, params.B
    R, V = x.R, x.V
    S = R @ V.T @ V @ R
    dZ, dW = _unit_tangents(x.n, x.m)

    bracket = (
        np.einsum('aij,jk,bkl->abil', dZ, S, dZ)
        - np.einsum('aij,jk,bkl->abil', dZ, R @ V.T, dW)
        - np.einsum('aji,jk,bkl->abil', dW, V @ R, dZ)
        + np.einsum('aji,bjl->abil', dW, dW)
    )
    c = 0.5j * B / A
    DZ = 1j * np.einsum('aij,jk,bkl->abil', dZ, R, dZ) + c * bracket
    DW = c * np.einsum('ij,abjl->abil', V @ R, bracket) + 1j * np.einsum('aij,jk,bkl->abil', dW, R, dZ)

    DZ = (DZ + DZ.swapaxes(0, 1)) / 2
    DW = (DW + DW.swapaxes(0, 1)) / 2

    idx = index_sets(x.n, x.m)
    hol = np.empty((idx.nhol, idx.nhol, idx.nhol), dtype=complex)
    for K, (i, j) in enumerate(idx.omega):
        hol[K] = DZ[:, :, i, j]
    for K, (i, j) in enumerate(idx.omega_prime):
        hol[idx.nz + K] = DW[:, :, i, j]
    return hol


def _bilinear_display(x, params):
    """ Holomorphic symbols on :math:`\\mathbb{H}_{1,1}` from the explicit coefficients in y and v. """
    if (x.n, x.m) != (1, 1):
        raise DimensionMismatch(f'The explicit connection coefficients only exist for n=m=1 [{x.n}, {x.m}]')
    A, B = params.A, params.B
    y = x.Y[0, 0]
    v = x.V[0, 0]
    G1 = 1j / y + 1j * B * v**2 / (2 * A * y**2)
    G2 = -1j * B * v / (A * y)
    G3 = 1j * B / (2 * A)
    G1p = 1j * B * v**3 / (2 * A * y**3)
    G2p = 1j / y - 1j * B * v**2 / (A * y**2)
    G3p = 1j * B * v / (2 * A * y)
    return np.array([
        [[G1, G2 / 2], [G2 / 2, G3]],
        [[G1p, G2p / 2], [G2p / 2, G3p]],
    ])


def connection_closed(x, params=MetricParams(), form='general'):
    """ Levi-Civita connection in closed form.

    .. math::
        D(dZ) &= \\sqrt{-1}\\,dZ\\,Y^{-1}dZ + \\frac{\\sqrt{-1}B}{2A} \\left\\{ dZ\\,S\\,dZ - dZ\\,Y^{-1}V^tdW - dW^tVY^{-1}dZ + dW^tdW \\right\\} \\\\
        D(dW) &= \\frac{\\sqrt{-1}B}{2A} VY^{-1} \\left\\{ dZ\\,S\\,dZ - dZ\\,Y^{-1}V^tdW - dW^tVY^{-1}dZ + dW^tdW \\right\\} + \\sqrt{-1}\\,dW\\,Y^{-1}dZ

    with :math:`S = Y^{-1}V^tVY^{-1}`.
    The antiholomorphic half is the complex conjugate and mixed symbols vanish.

    Args:
        x (sjo.space.SiegelJacobiPoint): Point
        params (sjo.metric.MetricParams, optional): Metric constants
        form (str, optional): ``'general'`` for the matrix formulas above, ``'explicit'`` for the explicit coefficients in y and v on :math:`\\mathbb{H}_{1,1}`; Default **'general'**

    Returns:
        sjo.metric.ConnectionData
    """
    if form == 'general':
        hol = _bilinear_general(x, params)
    elif form == 'explicit':
        hol = _bilinear_display(x, params)
    else:
        raise ConfigError(f'Unknown connection form "{form}", should be one of [general, explicit]')

    idx = index_sets(x.n, x.m)
    h = idx.nhol
    full = np.zeros((2 * h,) * 3, dtype=complex)
    full[:h, :h, :h] = hol
    full[h:, h:, h:] = hol.conj()

    perm = holomorphic_order(x.n, x.m)
    gamma = np.zeros_like(full)
    gamma[np.ix_(perm, perm, perm)] = full
    return ConnectionData(x.n, x.m, gamma, source=f'closed-{form}')
