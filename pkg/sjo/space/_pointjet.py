#
#   Points expanded as jets of the complexified coordinates
#   Copyright EAVISE
#

import logging
import numpy as np

from ..errors import DimensionMismatch
from ..jet import Jet, jet_space
from ._indexsets import index_sets
from ._point import SiegelJacobiPoint

__all__ = ['PointJet']
log = logging.getLogger(__name__)


class PointJet:
    """ Point of :math:`\\mathbb{H}_{n,m}` whose coordinates are jets.

    The four coordinate matrices Z, :math:`\\overline{Z}`, W and :math:`\\overline{W}` are independent jets,
    so a smooth function evaluated on a point jet returns its Taylor expansion with respect to the variables of the jet space.
    A *seeded* point jet has the complexified coordinates themselves as variables, in :class:`~sjo.space.IndexSets` order.

    Args:
        Z, Zbar (sjo.jet.Jet): n x n jets
        W, Wbar (sjo.jet.Jet): m x n jets
        seeded (bool, optional): Whether the jets are the coordinate variables; Default **False**
    """
    def __init__(self, Z, Zbar, W, Wbar, seeded=False):
        if Z.shape != Zbar.shape or W.shape != Wbar.shape or Z.shape[-1] != W.shape[-1]:
            raise DimensionMismatch(f'Inconsistent point jet shapes [{Z.shape}, {Zbar.shape}, {W.shape}, {Wbar.shape}]')
        self.Z = Z
        self.Zbar = Zbar
        self.W = W
        self.Wbar = Wbar
        self.seeded = seeded
        self._cache = {}

    @classmethod
    def seed(cls, x, order):
        """ Expand a point in its own complexified coordinates.

        Args:
            x (sjo.space.SiegelJacobiPoint): Expansion point
            order (int): Truncation order
        """
        idx = index_sets(x.n, x.m)
        space = jet_space(idx.nvars)
        space.grow(order)
        size = space.size[order]

        def coordinate_matrix(value, kind, symmetric):
            coef = np.zeros(value.shape + (size,), dtype=complex)
            coef[..., 0] = value
            if order > 0:
                for i in range(value.shape[0]):
                    for j in range(value.shape[1]):
                        if symmetric:
                            pos = idx.offset[kind] + idx.omega_index(i, j)
                        else:
                            pos = idx.offset[kind] + idx.omega_prime_index(i, j)
                        coef[i, j, 1 + pos] = 1
            return Jet(space, order, coef)

        return cls(
            coordinate_matrix(x.Z, 'Z', True),
            coordinate_matrix(x.Z.conj(), 'Zbar', True),
            coordinate_matrix(x.W, 'W', False),
            coordinate_matrix(x.W.conj(), 'Wbar', False),
            seeded=True,
        )

    def __repr__(self):
        return f'{self.__class__.__name__}(n={self.n}, m={self.m}, order={self.order}, seeded={self.seeded})'

    @property
    def n(self):
        return self.Z.shape[-1]

    @property
    def m(self):
        return self.W.shape[-2]

    @property
    def order(self):
        return min(self.Z.order, self.Zbar.order, self.W.order, self.Wbar.order)

    @property
    def space(self):
        return self.Z.space

    @property
    def index_sets(self):
        return index_sets(self.n, self.m)

    def point(self):
        """ :class:`~sjo.space.SiegelJacobiPoint` at the expansion point. """
        return SiegelJacobiPoint(self.Z.value, self.W.value)

    # Derived quantities, as jets
    @property
    def Y(self):
        if 'Y' not in self._cache:
            self._cache['Y'] = (self.Z - self.Zbar) * (-0.5j)
        return self._cache['Y']

    @property
    def V(self):
        if 'V' not in self._cache:
            self._cache['V'] = (self.W - self.Wbar) * (-0.5j)
        return self._cache['V']

    @property
    def R(self):
        if 'R' not in self._cache:
            self._cache['R'] = self.Y.inv()
        return self._cache['R']

    @property
    def X(self):
        """ Real part of Z. """
        return (self.Z + self.Zbar) * 0.5

    @property
    def U(self):
        """ Real part of W. """
        return (self.W + self.Wbar) * 0.5

    # Matrix gradients
    def _check_seeded(self):
        if not self.seeded:
            raise DimensionMismatch('Matrix gradients are only available on seeded point jets')

    def _gradient_z(self, F, kind):
        self._check_seeded()
        idx = self.index_sets
        n = self.n
        diffs = {}
        coef = None
        for i in range(n):
            for j in range(n):
                pos = idx.offset[kind] + idx.omega_index(i, j)
                if pos not in diffs:
                    diffs[pos] = F.diff(pos)
                d = diffs[pos]
                if coef is None:
                    coef = np.zeros(F.shape + (n, n, d.coef.shape[-1]), dtype=complex)
                coef[..., i, j, :] = d.coef * (1 if i == j else 0.5)
        return Jet(F.space, F.order - 1, coef)

    def _gradient_w(self, F, kind):
        self._check_seeded()
        idx = self.index_sets
        n, m = self.n, self.m
        coef = None
        for i in range(m):
            for j in range(n):
                d = F.diff(idx.offset[kind] + idx.omega_prime_index(i, j))
                if coef is None:
                    coef = np.zeros(F.shape + (n, m, d.coef.shape[-1]), dtype=complex)
                coef[..., j, i, :] = d.coef
        return Jet(F.space, F.order - 1, coef)

    def dZ(self, F):
        """ Symmetric gradient :math:`\\frac{\\partial F}{\\partial Z}` with halved off-diagonal entries, appended as two trailing axes. """
        return self._gradient_z(F, 'Z')

    def dZbar(self, F):
        return self._gradient_z(F, 'Zbar')

    def dW(self, F):
        """ Gradient :math:`\\frac{\\partial F}{\\partial W}` as n x m trailing axes, entry (j, i) differentiating :math:`w_{ij}`. """
        return self._gradient_w(F, 'W')

    def dWbar(self, F):
        return self._gradient_w(F, 'Wbar')

    # Composition
    def displacements(self):
        """ Displacement of every complexified coordinate from its constant term, in :class:`~sjo.space.IndexSets` order. """
        idx = self.index_sets
        out = []
        for kind, matrix, pairs in (('Z', self.Z, idx.omega), ('Zbar', self.Zbar, idx.omega),
                                    ('W', self.W, idx.omega_prime), ('Wbar', self.Wbar, idx.omega_prime)):
            for i, j in pairs:
                entry = matrix[i, j]
                out.append(entry - entry.value)
        return out

    def pullback(self, R):
        """ Express a jet computed on the seed at this point's expansion point in the variables of this point jet.

        Args:
            R (sjo.jet.Jet): Jet in the complexified coordinates of ``self.point()``, of order at least ``self.order``
        """
        if self.seeded and R.space is self.space:
            return R.truncate(self.order)
        if self.order == 0:
            return Jet.constant(self.space, 0, R.value)
        return R.substitute(self.displacements())
