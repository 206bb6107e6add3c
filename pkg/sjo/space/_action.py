#
#   Action of the Jacobi group and the factor of automorphy
#   Copyright EAVISE
#

import logging
import math
import numpy as np

from ..errors import SingularFactor, DimensionMismatch
from ..jet import det, inv, trace, transpose, exp, power, value
from ._point import SiegelJacobiPoint
from ._pointjet import PointJet

__all__ = ['act', 'automorphy_factor', 'cocycle_phase', 'cotangent_transforms', 'CotangentTransform', 'TAU_SING']
log = logging.getLogger(__name__)

TAU_SING = 1e-12


def _check(g, x):
    if (g.n, g.m) != (x.n, x.m):
        raise DimensionMismatch(f'Group element of H_{{{g.n},{g.m}}} cannot act on a point of H_{{{x.n},{x.m}}}')


def _factor(g, Z, tau_sing):
    Q = g.C @ Z + g.D
    d = np.linalg.det(value(Q))
    if np.any(np.abs(d) < tau_sing):
        raise SingularFactor(f'|det(CZ+D)| = {np.min(np.abs(d)):.3e} below {tau_sing:.1e}')
    return Q


def act(g, x, tau_sing=TAU_SING):
    """ Action :math:`g \\cdot (Z, W) = ((AZ+B)(CZ+D)^{-1}, (W + \\lambda Z + \\mu)(CZ+D)^{-1})`.

    Args:
        g (sjo.space.JacobiGroupElement): Group element
        x (sjo.space.SiegelJacobiPoint or sjo.space.PointJet): Point
        tau_sing (float, optional): Smallest allowed :math:`|\\det(CZ+D)|`; Default **1e-12**

    Returns:
        Same type as ``x``. For point jets the conjugate coordinates transform with the same (real) group element.
    """
    _check(g, x)
    if isinstance(x, PointJet):
        Z, W = _act_matrices(g, x.Z, x.W, tau_sing)
        Zbar, Wbar = _act_matrices(g, x.Zbar, x.Wbar, tau_sing)
        return PointJet(Z, Zbar, W, Wbar)

    Z, W = _act_matrices(g, x.Z, x.W, tau_sing)
    return SiegelJacobiPoint(Z, W)


def _act_matrices(g, Z, W, tau_sing):
    Qinv = inv(_factor(g, Z, tau_sing))
    return (g.A @ Z + g.B) @ Qinv, (W + g.lam @ Z + g.mu) @ Qinv


def automorphy_factor(g, x, wi, literal=False, tau_sing=TAU_SING):
    """ Factor of automorphy of weight k and index M.

    .. math::
        J(g, (Z,W)) = \\det(CZ+D)^k \\, e^{2\\pi i \\, Tr\\left(M \\widetilde{W}(CZ+D)^{-1}C\\widetilde{W}^t - M(\\lambda Z\\lambda^t + 2\\lambda W^t - \\mu\\lambda^t)\\right)}

    Args:
        g (sjo.space.JacobiGroupElement): Group element
        x (sjo.space.SiegelJacobiPoint or sjo.space.PointJet): Point
        wi (sjo.space.WeightIndex): Weight and index
        literal (bool, optional): Use :math:`\\widetilde{W} = W`; Default **False**, which uses :math:`\\widetilde{W} = W + \\lambda Z + \\mu`

    Note:
        With the default convention the factor satisfies the cocycle relation up to a constant of modulus one,
        coming from the central :math:`\\kappa` part which carries no factor.
        The literal form only coincides with it for elements without Heisenberg part.
    """
    _check(g, x)
    if wi.m != g.m:
        raise DimensionMismatch(f'Index of size {wi.m} does not match m={g.m}')

    Q = _factor(g, x.Z, tau_sing)
    Z, W = x.Z, x.W
    Wt = W if literal else W + g.lam @ Z + g.mu
    M = wi.M
    lam = g.lam

    first = M @ (Wt @ (inv(Q) @ (g.C @ transpose(Wt))))
    second = M @ (lam @ Z @ lam.T + 2 * (lam @ transpose(W)) - g.mu @ lam.T)
    phase = exp((2j * math.pi) * trace(first - second))
    return power(det(Q), wi.k) * phase


def cocycle_phase(g1, g2, x, wi):
    """ Ratio :math:`J(g_1 g_2, x) / (J(g_1, g_2 x) J(g_2, x))`, a constant of modulus one for integral Heisenberg parts. """
    from ._group import compose

    lhs = automorphy_factor(compose(g1, g2), x, wi)
    rhs = automorphy_factor(g1, act(g2, x), wi) * automorphy_factor(g2, x, wi)
    return complex(lhs / rhs)


class CotangentTransform:
    """ Linear map sending :math:`(dZ, dW)` at x to :math:`(d(gZ), d(gW))` at :math:`g \\cdot x`.

    .. math::
        d\\widetilde{Z} = Q^{-t} dZ Q^{-1}, \\qquad
        d\\widetilde{W} = dW Q^{-1} + \\{\\lambda - (W+\\lambda Z+\\mu)Q^{-1}C\\} dZ Q^{-1}

    with :math:`Q = CZ+D`.

    Attributes:
        self.Qinv: :math:`(CZ+D)^{-1}`
        self.correction: :math:`\\lambda - (W+\\lambda Z+\\mu)(CZ+D)^{-1}C`, an m x n matrix
    """
    def __init__(self, Qinv, correction):
        self.Qinv = Qinv
        self.correction = correction

    @property
    def n(self):
        return self.Qinv.shape[0]

    @property
    def m(self):
        return self.correction.shape[0]

    def __call__(self, dZ, dW):
        dZ = np.asarray(dZ)
        dW = np.asarray(dW)
        dZt = self.Qinv.T @ dZ @ self.Qinv
        dWt = dW @ self.Qinv + self.correction @ dZ @ self.Qinv
        return dZt, dWt

    def conjugate(self):
        """ Transform of the conjugate differentials :math:`(d\\overline{Z}, d\\overline{W})`. """
        return CotangentTransform(self.Qinv.conj(), self.correction.conj())

    def matrix(self):
        """ Jacobian with respect to the holomorphic coordinates :math:`(Z_\\Omega, W_{\\Omega'})` in :class:`~sjo.space.IndexSets` order. """
        from ._indexsets import index_sets

        idx = index_sets(self.n, self.m)
        out = np.zeros((idx.nhol, idx.nhol), dtype=complex)
        for col in range(idx.nhol):
            dZ = np.zeros((self.n, self.n), dtype=complex)
            dW = np.zeros((self.m, self.n), dtype=complex)
            if col < idx.nz:
                i, j = idx.omega[col]
                dZ[i, j] = dZ[j, i] = 1
            else:
                i, j = idx.omega_prime[col - idx.nz]
                dW[i, j] = 1
            dZt, dWt = self(dZ, dW)
            out[:idx.nz, col] = [dZt[i, j] for i, j in idx.omega]
            out[idx.nz:, col] = [dWt[i, j] for i, j in idx.omega_prime]
        return out


def cotangent_transforms(g, x, tau_sing=TAU_SING):
    """ Differential of the action at a point.

    Args:
        g (sjo.space.JacobiGroupElement): Group element
        x (sjo.space.SiegelJacobiPoint): Point

    Returns:
        sjo.space.CotangentTransform
    """
    _check(g, x)
    Q = _factor(g, x.Z, tau_sing)
    Qinv = np.linalg.inv(Q)
    Wt = (x.W + g.lam @ x.Z + g.mu) @ Qinv
    return CotangentTransform(Qinv, g.lam - Wt @ g.C)
