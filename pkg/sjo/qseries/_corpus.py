#
#   Eta, theta functions and weak Jacobi forms of index one
#   Copyright EAVISE
#

import logging
import math
from fractions import Fraction

from ..errors import ConfigError
from ._series import QSeries, FourierJacobiSeries

__all__ = [
    'eta', 'eta_product', 'theta1', 'theta1_triple_product', 'jacobi_theta', 'theta_null', 'theta_series',
    'weak_jacobi', 'WEAK_WEIGHTS', 'WORK_MARGIN',
]
log = logging.getLogger(__name__)

WEAK_WEIGHTS = (-2, 0)
WORK_MARGIN = 2


def _check_trunc(trunc):
    if trunc < 1:
        raise ConfigError(f'Truncation should be at least 1 [{trunc}]')


def eta(trunc):
    """ Dedekind eta :math:`\\eta = q^{1/24}\\prod_{n\\geq1}(1-q^n) = \\sum_{k\\in\\mathbb{Z}} (-1)^k q^{(6k-1)^2/24}`,
    from the pentagonal number expansion.

    Args:
        trunc (number): Exclusive bound of the q exponents
    """
    _check_trunc(trunc)
    trunc = Fraction(trunc)
    coeffs = {}
    bound = math.isqrt(int(24 * trunc)) // 6 + 2
    for k in range(-bound, bound + 1):
        e = Fraction((6 * k - 1) ** 2, 24)
        if e < trunc:
            coeffs[e] = (-1) ** (k % 2)
    return QSeries(coeffs, trunc, weight=Fraction(1, 2))


def eta_product(trunc):
    """ :math:`\\prod_{n\\geq1}(1-q^n)` by direct multiplication, an independent check of :func:`eta`. """
    _check_trunc(trunc)
    result = QSeries.one(trunc)
    for n in range(1, math.ceil(trunc)):
        result = result * QSeries({0: 1, n: -1}, trunc)
    return result


def theta1(trunc):
    """ Odd Jacobi theta function

    .. math::
        \\vartheta(\\tau, z) = \\sum_{n\\in\\mathbb{Z}} (-1)^n q^{(2n+1)^2/8} \\zeta^{(2n+1)/2}
        = q^{1/8}(\\zeta^{1/2}-\\zeta^{-1/2}) \\prod_{n\\geq1}(1-q^n)(1-q^n\\zeta)(1-q^n\\zeta^{-1})

    It has weight 1/2 and index 1/2, and vanishes at z = 0.
    """
    _check_trunc(trunc)
    trunc = Fraction(trunc)
    coeffs = {}
    bound = math.isqrt(int(8 * trunc)) + 2
    for n in range(-bound, bound + 1):
        e = Fraction((2 * n + 1) ** 2, 8)
        if e < trunc:
            coeffs[(e, Fraction(2 * n + 1, 2))] = (-1) ** (n % 2)
    return FourierJacobiSeries(coeffs, trunc, Fraction(1, 2), Fraction(1, 2))


def theta1_triple_product(trunc):
    """ :func:`theta1` from the Jacobi triple product. """
    _check_trunc(trunc)
    trunc = Fraction(trunc)
    work = trunc - Fraction(1, 8)
    result = FourierJacobiSeries({(0, 0): 1}, work)
    for n in range(1, math.ceil(work)):
        factor = FourierJacobiSeries({(0, 0): 1, (n, 0): -1}, work)
        factor = factor * FourierJacobiSeries({(0, 0): 1, (n, 1): -1}, work)
        factor = factor * FourierJacobiSeries({(0, 0): 1, (n, -1): -1}, work)
        result = result * factor
    lead = FourierJacobiSeries({(Fraction(1, 8), Fraction(1, 2)): 1, (Fraction(1, 8), Fraction(-1, 2)): -1}, trunc)
    return (lead * result).with_signature(Fraction(1, 2), Fraction(1, 2))


def jacobi_theta(i, trunc):
    """ Jacobi theta functions of weight 1/2 and index 1/2.

    .. math::
        \\vartheta_1 = \\vartheta, \\quad
        \\vartheta_2 = \\sum_n q^{(n+1/2)^2/2}\\zeta^{n+1/2}, \\quad
        \\vartheta_3 = \\sum_n q^{n^2/2}\\zeta^n, \\quad
        \\vartheta_4 = \\sum_n (-1)^n q^{n^2/2}\\zeta^n

    Args:
        i (int): 1, 2, 3 or 4
        trunc (number): Exclusive bound of the q exponents
    """
    if i == 1:
        return theta1(trunc)
    if i not in (2, 3, 4):
        raise ConfigError(f'Theta function index should be 1, 2, 3 or 4 [{i}]')
    _check_trunc(trunc)
    trunc = Fraction(trunc)
    coeffs = {}
    bound = math.isqrt(int(2 * trunc)) + 2
    for n in range(-bound, bound + 1):
        r = Fraction(2 * n + 1, 2) if i == 2 else Fraction(n)
        e = r * r / 2
        if e < trunc:
            coeffs[(e, r)] = (-1) ** (n % 2) if i == 4 else 1
    return FourierJacobiSeries(coeffs, trunc, Fraction(1, 2), Fraction(1, 2))


def theta_null(i, trunc):
    """ Theta constant :math:`\\vartheta_i(\\tau, 0)` as a :class:`~sjo.qseries.QSeries`. """
    return jacobi_theta(i, trunc).at_zero()


def theta_series(mu, trunc):
    """ Index one theta series :math:`\\vartheta_{1,\\mu}(\\tau, z) = \\sum_{r \\equiv \\mu (2)} q^{r^2/4}\\zeta^r`. """
    if mu not in (0, 1):
        raise ConfigError(f'Theta series residue should be 0 or 1 [{mu}]')
    _check_trunc(trunc)
    trunc = Fraction(trunc)
    coeffs = {}
    bound = math.isqrt(int(4 * trunc)) + 2
    for r in range(-bound, bound + 1):
        if r % 2 == mu and Fraction(r * r, 4) < trunc:
            coeffs[(Fraction(r * r, 4), r)] = 1
    return FourierJacobiSeries(coeffs, trunc, Fraction(1, 2), 1)


def weak_jacobi(k, trunc):
    """ Weak Jacobi forms of index one.

    .. math::
        \\varphi_{-2,1} = \\frac{\\vartheta(\\tau,z)^2}{\\eta(\\tau)^6}, \\qquad
        \\varphi_{0,1} = 4 \\sum_{i=2}^{4} \\left(\\frac{\\vartheta_i(\\tau,z)}{\\vartheta_i(\\tau,0)}\\right)^2

    with q-constant terms :math:`\\zeta - 2 + \\zeta^{-1}` and :math:`\\zeta + 10 + \\zeta^{-1}`.

    Args:
        k (int): Weight, -2 or 0
        trunc (int): Exclusive bound of the q exponents

    Returns:
        sjo.qseries.FourierJacobiSeries: Integer coefficients with integral exponents
    """
    if k not in WEAK_WEIGHTS:
        raise ConfigError(f'Weak Jacobi forms are available for weights {WEAK_WEIGHTS} [{k}]')
    _check_trunc(trunc)
    work = Fraction(trunc) + WORK_MARGIN

    if k == -2:
        phi = theta1(work) ** 2 / eta(work) ** 6
    else:
        phi = None
        for i in (2, 3, 4):
            term = (jacobi_theta(i, work) / theta_null(i, work)) ** 2
            phi = term if phi is None else phi + term
        phi = phi * 4

    log.debug(f'Built weak Jacobi form of weight {k} up to q^{trunc} [{len(phi.coeffs)} terms]')
    return phi.truncate(trunc).with_signature(k, 1)
