#
#   Analytic test functions
#   Copyright EAVISE
#

import logging
import numpy as np

from ..jet import Jet
from ..space import SmoothMap, index_sets, rng

__all__ = ['ExpPolyTestFunction', 'coordinate_vector']
log = logging.getLogger(__name__)


def coordinate_vector(P):
    """ Vector jet of all complexified coordinates of a point jet, in :class:`~sjo.space.IndexSets` order. """
    idx = P.index_sets
    entries = [P.Z[i, j] for i, j in idx.omega]
    entries += [P.Zbar[i, j] for i, j in idx.omega]
    entries += [P.W[i, j] for i, j in idx.omega_prime]
    entries += [P.Wbar[i, j] for i, j in idx.omega_prime]
    return Jet.stack(entries)


class ExpPolyTestFunction(SmoothMap):
    """ Polynomial times exponential test function.

    .. math::
        f = (c_0 + c_1^t x + x^t c_2 x) \\, e^{Tr(PZ) + Tr(Q^tW) + Tr(P'\\overline{Z}) + Tr(Q'^t\\overline{W})}

    with x the vector of complexified coordinates.
    All partial derivatives are exact, as the function is evaluated with jet arithmetic.

    Args:
        P (array-like): Complex symmetric n x n matrix
        Q (array-like): Complex m x n matrix
        Pbar (array-like): Complex symmetric n x n matrix of the antiholomorphic exponent
        Qbar (array-like): Complex m x n matrix of the antiholomorphic exponent
        c0 (complex): Constant term of the polynomial
        c1 (array-like): Linear coefficients, one per complexified coordinate
        c2 (array-like): Symmetric matrix of quadratic coefficients
    """
    def __init__(self, P, Q, Pbar, Qbar, c0, c1, c2):
        P = np.asarray(P, dtype=complex)
        Q = np.asarray(Q, dtype=complex)
        n, m = P.shape[0], Q.shape[0]
        Pbar = np.asarray(Pbar, dtype=complex)
        Qbar = np.asarray(Qbar, dtype=complex)
        c1 = np.asarray(c1, dtype=complex)
        c2 = np.asarray(c2, dtype=complex)

        idx = index_sets(n, m)
        hol = np.zeros(idx.nvars, dtype=bool)
        hol[:idx.nz] = True
        hol[2*idx.nz:2*idx.nz+idx.nw] = True
        holomorphic = (
            not np.any(Pbar) and not np.any(Qbar)
            and not np.any(c1[~hol]) and not np.any(c2[~hol]) and not np.any(c2[:, ~hol])
        )

        super().__init__(n, m, holomorphic=holomorphic)
        self.P = P
        self.Q = Q
        self.Pbar = Pbar
        self.Qbar = Qbar
        self.c0 = complex(c0)
        self.c1 = c1
        self.c2 = (c2 + c2.T) / 2

    @classmethod
    def random(cls, n, m, seed, holomorphic=False, scale=0.3):
        """ Random test function with coefficients of size ``scale``. """
        gen = rng(seed)
        idx = index_sets(n, m)

        def cnormal(*shape):
            return scale * (gen.normal(size=shape) + 1j * gen.normal(size=shape)) / np.sqrt(2)

        P = cnormal(n, n)
        P = (P + P.T) / 2
        Q = cnormal(m, n)
        Pbar = cnormal(n, n)
        Pbar = (Pbar + Pbar.T) / 2
        Qbar = cnormal(m, n)
        c0 = 1 + cnormal()
        c1 = cnormal(idx.nvars)
        c2 = cnormal(idx.nvars, idx.nvars)

        if holomorphic:
            mask = np.zeros(idx.nvars, dtype=bool)
            mask[:idx.nz] = True
            mask[2*idx.nz:2*idx.nz+idx.nw] = True
            Pbar[:] = 0
            Qbar[:] = 0
            c1[~mask] = 0
            c2[~mask] = 0
            c2[:, ~mask] = 0

        return cls(P, Q, Pbar, Qbar, c0, c1, c2)

    def jet(self, P):
        self._check(P)
        x = coordinate_vector(P)
        poly = Jet.einsum('v,v->', self.c1, x) + Jet.einsum('u,u->', x, Jet.einsum('uv,v->u', self.c2, x)) + self.c0
        exponent = (self.P @ P.Z).trace() + (self.Q.T @ P.W).trace()
        if not self.holomorphic:
            exponent = exponent + (self.Pbar @ P.Zbar).trace() + (self.Qbar.T @ P.Wbar).trace()
        return poly * exponent.exp()
