#
#   Series and Eisenstein series as smooth maps
#   Copyright EAVISE
#

import logging
import math
import numpy as np

from ..errors import DimensionMismatch, IndexOutOfRange
from ..jet import Jet, jet_space
from ..space import SmoothMap, JetMap, Coordinate, index_sets
from ._eisenstein import TAU_POLE, eisenstein_G_partial, twisted_G_partial

__all__ = ['SeriesMap', 'ModularMap', 'EisensteinMap', 'TwistedEisensteinMap', 'E1hatMap', 'g2_star_map']
log = logging.getLogger(__name__)


def _holomorphic_jet(P, variables, partial):
    """ Jet of a function of a few holomorphic coordinates, built from its partial derivatives at the expansion point of P.

    Args:
        P (sjo.space.PointJet): Point jet
        variables (list): Positions of the coordinates the function depends on
        partial (callable): ``partial(orders) -> complex`` with one derivative order per variable
    """
    idx = P.index_sets
    space = jet_space(idx.nvars)
    order = P.order
    space.grow(order)
    exponents = space.exponents[:space.size[order]]
    others = np.ones(idx.nvars, dtype=bool)
    others[list(variables)] = False

    coef = np.zeros(space.size[order], dtype=complex)
    for l in np.nonzero(~np.any(exponents[:, others], axis=1))[0]:
        coef[l] = partial(tuple(exponents[l, variables])) / space.factorial[l]
    return P.pullback(Jet(space, order, coef))


def _elliptic_variables(n, m, row):
    if n != 1:
        raise DimensionMismatch(f'Elliptic functions live on H_{{1,m}} [n={n}]')
    if not 0 <= row < m:
        raise IndexOutOfRange(f'Row {row} out of range [0, {m})')
    idx = index_sets(n, m)
    return idx.position(Coordinate('Z', 0, 0)), idx.position(Coordinate('W', row, 0))


class SeriesMap(SmoothMap):
    """ Fourier-Jacobi series :math:`\\sum c(n,r) e^{2\\pi i(n z + r w_t)}` as a holomorphic function on :math:`\\mathbb{H}_{1,m}`.

    Partial derivatives are taken term by term:
    :math:`\\partial_z^a\\partial_w^b` multiplies every term by :math:`(2\\pi i n)^a(2\\pi i r)^b`.

    Args:
        series (sjo.qseries.FourierJacobiSeries): Series
        m (int, optional): Number of elliptic variables; Default **1**
        row (int, optional): Elliptic variable :math:`w_t` the series depends on; Default **0**
        tol (float, optional): Largest allowed truncation tail estimate at every evaluation point; Default **None**
    """
    def __init__(self, series, m=1, row=0, tol=None):
        super().__init__(1, m, holomorphic=True)
        self.variables = _elliptic_variables(1, m, row)
        self.series = series
        self.row = row
        self.tol = tol
        self._n, self._r, self._c = series.arrays()
        self._prefactor = series.complex_prefactor()

    def jet(self, P):
        self._check(P)
        x = P.point()
        z, w = x.z, complex(x.W[self.row, 0])
        if self.tol is not None:
            self.series.evaluate(z, w, self.tol)

        terms = self._prefactor * self._c * np.exp(2j * math.pi * (self._n * z + self._r * w))
        fz = 2j * math.pi * self._n
        fw = 2j * math.pi * self._r

        def partial(orders):
            a, b = orders
            return complex(np.sum(terms * fz**a * fw**b))

        return _holomorphic_jet(P, self.variables, partial)


class ModularMap(SmoothMap):
    """ q-series :math:`\\sum a(e) e^{2\\pi i e z}` as a function on :math:`\\mathbb{H}_{1,m}` that does not depend on w.

    Args:
        series (sjo.qseries.QSeries): Series
        m (int, optional): Number of elliptic variables; Default **1**
        tol (float, optional): Largest allowed truncation tail estimate; Default **None**
    """
    def __init__(self, series, m=1, tol=None):
        super().__init__(1, m, holomorphic=True)
        self.variables = _elliptic_variables(1, m, 0)[:1]
        self.series = series
        self.tol = tol
        self._e = np.array([float(e) for e in series.coeffs])
        self._c = np.array([float(c) for c in series.coeffs.values()])
        self._prefactor = series.complex_prefactor()

    def jet(self, P):
        self._check(P)
        z = P.point().z
        if self.tol is not None:
            self.series.evaluate(z, self.tol)
        terms = self._prefactor * self._c * np.exp(2j * math.pi * self._e * z)
        fz = 2j * math.pi * self._e
        return _holomorphic_jet(P, self.variables, lambda orders: complex(np.sum(terms * fz**orders[0])))


class EisensteinMap(SmoothMap):
    """ Lattice sum :math:`G_k(z)` on :math:`\\mathbb{H}_{1,m}`, with exact derivatives from the row-wise cotangent sums.
    For k = 2 this is the quasi-modular Eisenstein series.

    Args:
        k (int): Even weight
        m (int, optional): Number of elliptic variables; Default **1**
        bound (int, optional): Number of lattice rows; Default **chosen from Im z**
    """
    def __init__(self, k, m=1, bound=None):
        super().__init__(1, m, holomorphic=True)
        self.variables = _elliptic_variables(1, m, 0)[:1]
        self.k = k
        self.bound = bound

    def jet(self, P):
        self._check(P)
        z = P.point().z
        return _holomorphic_jet(P, self.variables, lambda orders: eisenstein_G_partial(self.k, z, orders[0], self.bound))


def g2_star_map(m=1, bound=None):
    """ Non-holomorphic weight 2 modular form :math:`G_2^* = G_2 - \\pi/y` as a SmoothMap. """
    correction = JetMap(lambda P: P.R[0, 0] * -math.pi, 1, m)
    return EisensteinMap(2, m, bound) + correction


class TwistedEisensteinMap(SmoothMap):
    """ Twisted Eisenstein series :math:`c \\, \\widehat{G}_n(z, w_t)` as a meromorphic function on :math:`\\mathbb{H}_{1,m}`.

    Args:
        order (int): Order n of the series
        m (int, optional): Number of elliptic variables; Default **1**
        row (int, optional): Elliptic variable :math:`w_t`; Default **0**
        scale (complex, optional): Constant factor c; Default **1**
        bound (int, optional): Number of lattice rows; Default **chosen from Im z**
        tau_pole (float, optional): Smallest allowed distance of :math:`w_t` to the lattice; Default **1e-3**
    """
    def __init__(self, order, m=1, row=0, scale=1, bound=None, tau_pole=TAU_POLE):
        super().__init__(1, m, holomorphic=True)
        self.variables = _elliptic_variables(1, m, row)
        self.series_order = order
        self.row = row
        self.scale = scale
        self.bound = bound
        self.tau_pole = tau_pole

    def jet(self, P):
        self._check(P)
        x = P.point()
        z, w = x.z, complex(x.W[self.row, 0])

        def partial(orders):
            p, q = orders
            return self.scale * twisted_G_partial(self.series_order, z, w, p, q, self.bound, self.tau_pole)

        return _holomorphic_jet(P, self.variables, partial)


class E1hatMap(TwistedEisensteinMap):
    """ :math:`\\widehat{E}_1(z, w_t) = \\frac{i}{2\\pi}\\widehat{G}_1(z, w_t)`. """
    def __init__(self, m=1, row=0, bound=None, tau_pole=TAU_POLE):
        super().__init__(1, m, row, 1j / (2 * math.pi), bound, tau_pole)
