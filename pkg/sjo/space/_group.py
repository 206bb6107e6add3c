#
#   Jacobi group elements
#   Copyright EAVISE
#

import logging
import numpy as np

from ..errors import InvalidGroupElement

__all__ = ['JacobiGroupElement', 'identity_element', 'compose', 'inverse', 'translation', 'inversion', 'heisenberg']
log = logging.getLogger(__name__)

TAU_GROUP = 1e-12


def _real(value, shape, name):
    try:
        value = np.array(value, dtype=float)
    except (TypeError, ValueError) as err:
        raise InvalidGroupElement(f'{name} should be a real matrix: {err}') from None
    if value.ndim == 0 and shape == (1, 1):
        value = value.reshape(1, 1)
    if value.shape != shape:
        raise InvalidGroupElement(f'{name} should have shape {shape} [{value.shape}]')
    value.setflags(write=False)
    return value


class JacobiGroupElement:
    """ Element :math:`(M, (\\lambda, \\mu; \\kappa))` of the Jacobi group :math:`Sp(n,\\mathbb{R}) \\ltimes H_{\\mathbb{R}}^{(n,m)}`.

    Args:
        A, B, C, D (array-like): Real n x n blocks of the symplectic matrix
        lam (array-like): Real m x n matrix :math:`\\lambda`
        mu (array-like): Real m x n matrix :math:`\\mu`
        kappa (array-like): Real m x m matrix :math:`\\kappa`
        validate (bool, optional): Check the group invariants; Default **True**

    Note:
        The tolerance of the symplectic check scales with the square of the largest entry,
        because products of integer generators quickly grow large entries.
    """
    def __init__(self, A, B, C, D, lam, mu, kappa, validate=True):
        A = np.array(A, dtype=float)
        if A.ndim == 0:
            A = A.reshape(1, 1)
        n = A.shape[0]
        lam = np.array(lam, dtype=float)
        if lam.ndim == 0:
            lam = lam.reshape(1, 1)
        elif lam.ndim == 1:
            lam = lam.reshape(1, -1)
        m = lam.shape[0]

        self.A = _real(A, (n, n), 'A')
        self.B = _real(B, (n, n), 'B')
        self.C = _real(C, (n, n), 'C')
        self.D = _real(D, (n, n), 'D')
        self.lam = _real(lam, (m, n), 'lambda')
        self.mu = _real(np.reshape(mu, (m, n)) if np.size(mu) == m * n else mu, (m, n), 'mu')
        self.kappa = _real(np.reshape(kappa, (m, m)) if np.size(kappa) == m * m else kappa, (m, m), 'kappa')

        if validate:
            scale = max(1.0, np.max(np.abs(self.M))) ** 2
            res = self.symplectic_residual()
            if res > TAU_GROUP * scale:
                raise InvalidGroupElement(f'Matrix is not symplectic [residual {res:.3e}]')
            sym = self.kappa + self.mu @ self.lam.T
            res = np.max(np.abs(sym - sym.T))
            if res > TAU_GROUP * max(scale, 1.0 + np.max(np.abs(sym))):
                raise InvalidGroupElement(f'kappa + mu lambda^t is not symmetric [residual {res:.3e}]')

    @property
    def n(self):
        return self.A.shape[0]

    @property
    def m(self):
        return self.lam.shape[0]

    @property
    def M(self):
        """ 2n x 2n symplectic matrix. """
        return np.block([[self.A, self.B], [self.C, self.D]])

    def symplectic_residual(self):
        n = self.n
        J = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
        M = self.M
        return np.max(np.abs(M.T @ J @ M - J))

    def is_identity(self):
        return (np.array_equal(self.M, np.eye(2*self.n)) and not np.any(self.lam) and not np.any(self.mu) and not np.any(self.kappa))

    def is_integral(self):
        return all(np.array_equal(x, np.round(x)) for x in (self.M, self.lam, self.mu, self.kappa))

    def __matmul__(self, other):
        if not isinstance(other, JacobiGroupElement):
            return NotImplemented
        return compose(self, other)

    def __repr__(self):
        return (
            f'{self.__class__.__name__}(A={self.A.tolist()}, B={self.B.tolist()}, C={self.C.tolist()}, D={self.D.tolist()}, '
            f'lambda={self.lam.tolist()}, mu={self.mu.tolist()}, kappa={self.kappa.tolist()})'
        )

    def allclose(self, other, atol=1e-12):
        return all(
            np.allclose(a, b, rtol=0, atol=atol)
            for a, b in ((self.M, other.M), (self.lam, other.lam), (self.mu, other.mu), (self.kappa, other.kappa))
        )

    def to_json(self):
        return {
            'A': self.A.tolist(),
            'B': self.B.tolist(),
            'C': self.C.tolist(),
            'D': self.D.tolist(),
            'lambda': self.lam.tolist(),
            'mu': self.mu.tolist(),
            'kappa': self.kappa.tolist(),
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data['A'], data['B'], data['C'], data['D'], data['lambda'], data['mu'], data['kappa'])
        except KeyError as err:
            raise InvalidGroupElement(f'Missing field {err} in group element data') from None


def identity_element(n, m):
    """ Neutral element of the Jacobi group. """
    zn = np.zeros((n, n))
    return JacobiGroupElement(np.eye(n), zn, zn, np.eye(n), np.zeros((m, n)), np.zeros((m, n)), np.zeros((m, m)), validate=False)


def translation(S, m):
    """ Symplectic block translation :math:`\\begin{pmatrix} I & S \\\\ 0 & I\\end{pmatrix}` for a symmetric S. """
    S = np.array(S, dtype=float)
    if S.ndim == 0:
        S = S.reshape(1, 1)
    n = S.shape[0]
    zn = np.zeros((n, n))
    return JacobiGroupElement(np.eye(n), S, zn, np.eye(n), np.zeros((m, n)), np.zeros((m, n)), np.zeros((m, m)))


def inversion(n, m):
    """ Symplectic inversion :math:`\\begin{pmatrix} 0 & -I \\\\ I & 0\\end{pmatrix}`. """
    zn = np.zeros((n, n))
    return JacobiGroupElement(zn, -np.eye(n), np.eye(n), zn, np.zeros((m, n)), np.zeros((m, n)), np.zeros((m, m)))


def heisenberg(lam, mu, kappa):
    """ Heisenberg element :math:`(I_{2n}, (\\lambda, \\mu; \\kappa))`. """
    lam = np.array(lam, dtype=float)
    if lam.ndim < 2:
        lam = lam.reshape(1, -1)
    m, n = lam.shape
    zn = np.zeros((n, n))
    return JacobiGroupElement(np.eye(n), zn, zn, np.eye(n), lam, mu, kappa)


def compose(g1, g2):
    """ Product :math:`g_1 g_2` in the Jacobi group.

    With :math:`(\\tilde\\lambda, \\tilde\\mu) = (\\lambda_1, \\mu_1) M_2`, the product is
    :math:`(M_1M_2, (\\tilde\\lambda + \\lambda_2, \\tilde\\mu + \\mu_2; \\kappa_1 + \\kappa_2 + \\tilde\\lambda\\mu_2^t - \\tilde\\mu\\lambda_2^t))`.
    """
    if (g1.n, g1.m) != (g2.n, g2.m):
        raise InvalidGroupElement(f'Cannot compose elements of different groups [{(g1.n, g1.m)}, {(g2.n, g2.m)}]')

    lt = g1.lam @ g2.A + g1.mu @ g2.C
    mt = g1.lam @ g2.B + g1.mu @ g2.D
    M = g1.M @ g2.M
    n = g1.n
    return JacobiGroupElement(
        M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:],
        lt + g2.lam,
        mt + g2.mu,
        g1.kappa + g2.kappa + lt @ g2.mu.T - mt @ g2.lam.T,
        validate=False,
    )


def inverse(g):
    """ Inverse element, such that ``compose(g, inverse(g))`` is the identity. """
    Minv = np.block([[g.D.T, -g.B.T], [-g.C.T, g.A.T]])
    lm = np.concatenate([g.lam, g.mu], axis=1) @ Minv
    n = g.n
    a, b = lm[:, :n], lm[:, n:]
    return JacobiGroupElement(
        Minv[:n, :n], Minv[:n, n:], Minv[n:, :n], Minv[n:, n:],
        -a,
        -b,
        -g.kappa + a @ b.T - b @ a.T,
        validate=False,
    )
