#
#   Heat operator, theta decomposition and the correspondence with modular forms
#   Copyright EAVISE
#

import logging
import math
from fractions import Fraction
import sympy

from ..errors import ConfigError, InvalidWeightIndex, NotThetaDecomposable
from ._eisenstein import eisenstein_G
from ._series import QSeries, FourierJacobiSeries

__all__ = ['heat_on_series', 'theta_decompose', 'theta_reconstruct', 'ez_correspond', 'serre_compat_check', 'heat_ez_check']
log = logging.getLogger(__name__)


def _check_index_one(s):
    if s.index is not None and s.index != 1:
        raise InvalidWeightIndex(f'Theta decomposition is only available for index 1 [{s.index}]')


def _check_integral(s):
    for n, r in s.coeffs:
        if n.denominator != 1 or r.denominator != 1:
            raise ConfigError(f'Series should have integral exponents [q^{n} zeta^{r}]')


def heat_on_series(s, M=1):
    """ Holomorphic heat operator :math:`L_M = \\frac{\\partial^2}{\\partial z^2} - 8\\pi i M \\frac{\\partial}{\\partial \\tau}` on a Fourier-Jacobi series.

    Every term :math:`q^n\\zeta^r` is an eigenfunction with eigenvalue :math:`4\\pi^2(4Mn - r^2)`;
    the :math:`4\\pi^2` goes into the prefactor, so the coefficients stay rational.

    Args:
        s (sjo.qseries.FourierJacobiSeries): Series with integral exponents
        M (number, optional): Index; Default **1**
    """
    M = Fraction(M)
    if s.index is not None and s.index != M:
        raise InvalidWeightIndex(f'Series of index {s.index} cannot be used with the heat operator of index {M}')
    _check_integral(s)
    coeffs = {(n, r): c * (4 * M * n - r * r) for (n, r), c in s.coeffs.items()}
    weight = None if s.weight is None else s.weight + 2
    return FourierJacobiSeries(coeffs, s.trunc, weight, s.index, s.prefactor * 4 * sympy.pi**2)


def theta_decompose(s):
    """ Split an index one series as :math:`h_0(\\tau)\\vartheta_{1,0}(\\tau,z) + h_1(\\tau)\\vartheta_{1,1}(\\tau,z)`.

    The coefficients should only depend on :math:`N = 4n - r^2` and :math:`r \\bmod 2`,
    which is checked exactly on every coefficient below the truncation.

    Args:
        s (sjo.qseries.FourierJacobiSeries): Index one series with integral exponents

    Returns:
        tuple: :class:`~sjo.qseries.QSeries` :math:`h_\\mu = \\sum_N c_\\mu(N) q^{N/4}` for :math:`\\mu = 0, 1`

    Raises:
        NotThetaDecomposable: The coefficients do not only depend on N and r mod 2
    """
    _check_index_one(s)
    _check_integral(s)
    T = s.trunc
    values = {}
    for (n, r), c in s.items():
        key = (4 * n - r * r, int(r) % 2)
        if values.setdefault(key, c) != c:
            raise NotThetaDecomposable(f'c({n},{r}) = {c} differs from {values[key]} with the same (N, r mod 2) = {key}')

    # Every (n, r) below the truncation that shares (N, mu) with a known coefficient should carry it
    for (N, mu), c in values.items():
        rmax = math.isqrt(max(int(4 * T - N), 0)) + 1
        for r in range(-rmax, rmax + 1):
            if r % 2 != mu:
                continue
            n = Fraction(N + r * r, 4)
            if n < T and s.coeffs.get((n, Fraction(r)), 0) != c:
                raise NotThetaDecomposable(f'c({n},{r}) = {s.coeffs.get((n, Fraction(r)), 0)} differs from c(N={N}, mu={mu}) = {c}')

    weight = None if s.weight is None else s.weight - Fraction(1, 2)
    h = []
    for mu in (0, 1):
        coeffs = {N / 4: c for (N, m), c in values.items() if m == mu}
        h.append(QSeries(coeffs, T - Fraction(mu, 4), s.prefactor, weight))
    return tuple(h)


def theta_reconstruct(h0, h1, weight=None):
    """ Inverse of :func:`theta_decompose`: :math:`h_0\\vartheta_{1,0} + h_1\\vartheta_{1,1}`. """
    from ._corpus import theta_series

    trunc = max(h0.trunc, h1.trunc) + 1
    result = h0 * theta_series(0, trunc) + h1 * theta_series(1, trunc)
    return result.with_signature(weight, 1)


def ez_correspond(s):
    """ Modular form :math:`h(\\tau) = h_0(4\\tau) + h_1(4\\tau) = \\sum_N c(N) q^N` attached to an index one series.

    Only exponents :math:`N \\equiv 0, 3 \\pmod 4` occur.
    The result has weight :math:`k - 1/2` and keeps the prefactor of the series.
    """
    h0, h1 = theta_decompose(s)
    return h0.rescale(4) + h1.rescale(4)


def heat_ez_check(s):
    """ Largest coefficient of :math:`\\mathcal{Z}(L s) - 4\\pi^2 q\\frac{d}{dq}\\mathcal{Z}(s)`, with :math:`\\mathcal{Z}` :func:`ez_correspond`.

    Returns:
        fractions.Fraction: 0 when the heat operator corresponds to :math:`-2\\pi i\\frac{d}{d\\tau}` on the modular side
    """
    lhs = ez_correspond(heat_on_series(s))
    h = ez_correspond(s)
    rhs = QSeries(h.derivative().coeffs, h.trunc, h.prefactor * 4 * sympy.pi**2)
    return max((abs(c) for c in (lhs - rhs).coeffs.values()), default=Fraction(0))


def serre_compat_check(s, k=None, trunc=None, literal=False):
    """ Compare the Serre type heat operator with its modular counterpart through :func:`ez_correspond`.

    The Jacobi side computes :math:`(L + 2(1-2k)G_2)s`, the modular side
    :math:`-2\\pi i\\left(\\frac{d}{d\\tau} - \\frac{i(k-1/2)}{2\\pi}\\widetilde{G}_2\\right)h`.
    The :math:`\\theta` substitution :math:`\\tau \\mapsto 4\\tau` also acts on the Eisenstein series,
    so :math:`\\widetilde{G}_2(\\tau) = 4G_2(4\\tau)`.

    Args:
        s (sjo.qseries.FourierJacobiSeries): Index one series
        k (int, optional): Weight; Default **s.weight**
        trunc (number, optional): Truncate s before the computation; Default **s.trunc**
        literal (bool, optional): Use :math:`\\widetilde{G}_2 = G_2(\\tau)`; Default **False**

    Returns:
        fractions.Fraction: Largest absolute coefficient of the difference, relative to the prefactor :math:`4\\pi^2`
    """
    if trunc is not None:
        s = s.truncate(trunc)
    if k is None:
        if s.weight is None:
            raise InvalidWeightIndex('Series carries no weight, pass k explicitly')
        k = s.weight
    k = Fraction(k)
    _check_index_one(s)
    if s.is_zero():
        return Fraction(0)

    G2 = eisenstein_G(2, s.trunc)
    lhs = ez_correspond(heat_on_series(s) + (G2 * s) * (2 * (1 - 2 * k)))

    h = ez_correspond(s)
    if literal:
        g = eisenstein_G(2, h.trunc)
    else:
        g = G2.rescale(4) * 4
    dh = QSeries(h.derivative().coeffs, h.trunc, h.prefactor * 4 * sympy.pi**2)
    rhs = dh + (g * h) * (Fraction(1, 2) - k)

    diff = (lhs - rhs).with_prefactor(4 * sympy.pi**2 * s.prefactor)
    worst = max((abs(c) for c in diff.coeffs.values()), default=Fraction(0))
    log.debug(f'Serre compatibility up to q^{diff.trunc}: largest discrepancy {worst}')
    return worst
