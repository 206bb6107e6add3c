#
#   Eisenstein series: classical, quasi-modular and twisted by an elliptic variable
#   Copyright EAVISE
#

import logging
import math
from fractions import Fraction
from functools import lru_cache
import numpy as np
from numpy.polynomial import polynomial as P
import sympy

from ..errors import ConfigError, PoleProximity, TruncationTooSmall
from ._series import QSeries

__all__ = [
    'bernoulli', 'divisor_sigma', 'eisenstein_G', 'eisenstein_E', 'eisenstein_E2', 'eisenstein_G_value',
    'quasi_G2_star', 'cot', 'inner_sum', 'twisted_G', 'twisted_G_partial', 'twisted_G_laurent',
    'eisenstein_G_partial', 'E1hat', 'pole_distance', 'lattice_bound', 'TAU_POLE', 'DECAY',
]
log = logging.getLogger(__name__)

TAU_POLE = 1e-3
DECAY = 7.0                 # Lattice rows are summed until exp(-2 pi DECAY) is negligible


def bernoulli(k):
    """ Bernoulli number :math:`B_k` as a :class:`fractions.Fraction`. """
    b = sympy.bernoulli(k)
    return Fraction(int(b.p), int(b.q))


def divisor_sigma(k, n):
    """ :math:`\\sigma_k(n) = \\sum_{d | n} d^k`. """
    return int(sympy.divisor_sigma(n, k))


def _check_weight(k):
    if k < 2 or k % 2:
        raise ConfigError(f'Eisenstein series need an even weight of at least 2 [{k}]')


def eisenstein_G(k, trunc):
    """ Eisenstein series

    .. math::
        G_k(\\tau) = \\sum_{(c,d) \\neq (0,0)} \\frac{1}{(c\\tau+d)^k} = 2\\zeta(k) + \\frac{2(2\\pi i)^k}{(k-1)!}\\sum_{n\\geq1}\\sigma_{k-1}(n)q^n

    with :math:`(2\\pi i)^k` kept as a symbolic prefactor, so that the coefficients are the rationals
    :math:`-B_k/k!` and :math:`2\\sigma_{k-1}(n)/(k-1)!`.
    For k = 2 the lattice sum is taken in Eisenstein order, which gives the quasi-modular :math:`G_2`.
    """
    _check_weight(k)
    if trunc < 1:
        raise TruncationTooSmall(f'Truncation should be at least 1 [{trunc}]')
    coeffs = {0: -bernoulli(k) / math.factorial(k)}
    for n in range(1, math.ceil(trunc)):
        coeffs[n] = Fraction(2 * divisor_sigma(k - 1, n), math.factorial(k - 1))
    return QSeries(coeffs, trunc, (2 * sympy.pi * sympy.I) ** k, weight=k)


def eisenstein_E(k, trunc):
    """ Normalized Eisenstein series :math:`E_k = G_k / 2\\zeta(k) = 1 - \\frac{2k}{B_k}\\sum_{n\\geq1}\\sigma_{k-1}(n)q^n`. """
    _check_weight(k)
    if trunc < 1:
        raise TruncationTooSmall(f'Truncation should be at least 1 [{trunc}]')
    factor = -Fraction(2 * k) / bernoulli(k)
    coeffs = {0: 1}
    for n in range(1, math.ceil(trunc)):
        coeffs[n] = factor * divisor_sigma(k - 1, n)
    return QSeries(coeffs, trunc, weight=k)


def eisenstein_E2(trunc):
    """ :math:`E_2 = 1 - 24\\sum_{n\\geq1}\\sigma_1(n)q^n`. """
    return eisenstein_E(2, trunc)


def cot(x):
    """ :math:`\\cot(\\pi x)` for complex x, evaluated with the exponential of negative real part. """
    x = np.asarray(x, dtype=complex)
    s = np.where(x.imag >= 0, 1, -1)
    t = np.exp(2j * np.pi * s * x)
    return -1j * s * (1 + t) / (1 - t)


@lru_cache(maxsize=None)
def _cot_polynomial(k):
    """ Coefficients of :math:`P_k` with :math:`\\frac{d^k}{dx^k}\\cot(\\pi x) = \\pi^k P_k(\\cot(\\pi x))`. """
    if k == 0:
        return np.array([0.0, 1.0])
    prev = _cot_polynomial(k - 1)
    return -P.polymul([1.0, 0.0, 1.0], P.polyder(prev))


def inner_sum(s, x):
    """ Symmetrically summed :math:`\\sum_{b\\in\\mathbb{Z}} (x+b)^{-s} = \\frac{(-1)^{s-1}\\pi^s}{(s-1)!} P_{s-1}(\\cot \\pi x)`. """
    if s < 1:
        raise ConfigError(f'Inner lattice sums need a positive exponent [{s}]')
    c = cot(x)
    return (-1) ** (s - 1) * np.pi ** s / math.factorial(s - 1) * P.polyval(c, _cot_polynomial(s - 1))


def lattice_bound(z, w=0j, bound=None):
    """ Number of lattice rows :math:`a\\tau + w + \\mathbb{Z}` needed for exponential decay below :math:`e^{-2\\pi \\cdot DECAY}`. """
    if bound is not None:
        return int(bound)
    y = complex(z).imag
    return int(math.ceil((DECAY + abs(complex(w).imag)) / y)) + 2


def eisenstein_G_value(k, z, bound=None):
    """ Lattice sum :math:`G_k(z)` in Eisenstein order.

    Every row :math:`cz + \\mathbb{Z}` is summed in closed form with :func:`inner_sum`,
    and the rows with :math:`|c| \\leq` ``bound`` are added.

    Args:
        k (int): Even weight of at least 2
        z (complex): Point of the upper half plane
        bound (int, optional): Number of rows on each side; Default **chosen from Im z**
    """
    return eisenstein_G_partial(k, z, 0, bound)


def eisenstein_G_partial(k, z, p=0, bound=None):
    """ Derivative :math:`\\frac{d^p}{dz^p} G_k(z) = (-1)^p (k)_p \\sum_{c \\neq 0} c^p \\sum_d (cz+d)^{-k-p}`, plus :math:`2\\zeta(k)` when p = 0. """
    _check_weight(k)
    z = complex(z)
    A = lattice_bound(z, bound=bound)
    c = np.arange(1, A + 1)
    s = k + p
    rows = c.astype(float) ** p * (inner_sum(s, c * z) + (-1) ** p * inner_sum(s, -c * z))
    total = np.sum(rows)
    if p == 0:
        total += float(-(2 * sympy.pi * sympy.I) ** k * sympy.bernoulli(k) / sympy.factorial(k))
    return complex((-1) ** p * math.prod(range(k, k + p)) * total)


def quasi_G2_star(z, bound=None):
    """ Non-holomorphic modular form :math:`G_2^*(z) = G_2(z) - \\pi / Im(z)` of weight 2. """
    z = complex(z)
    return eisenstein_G_value(2, z, bound) - np.pi / z.imag


def pole_distance(z, w):
    """ Distance from w to the nearest lattice point of :math:`\\mathbb{Z}z + \\mathbb{Z}`. """
    z, w = complex(z), complex(w)
    a0 = -w.imag / z.imag
    best = math.inf
    for a in (math.floor(a0), math.ceil(a0)):
        x = w + a * z
        for b in (math.floor(-x.real), math.ceil(-x.real)):
            best = min(best, abs(x + b))
    return best


def twisted_G_partial(n, z, w, p=0, q=0, bound=None, tau_pole=TAU_POLE, tol=None):
    """ Partial derivative :math:`\\partial_z^p \\partial_w^q \\widehat{G}_n(z, w)` of

    .. math::
        \\widehat{G}_n(z,w) = \\sum_{(a,b)\\in\\mathbb{Z}^2} \\frac{1}{(az+b+w)^n}

    computed as :math:`(-1)^{p+q}(n)_{p+q}\\sum_a a^p \\sum_b (az+b+w)^{-n-p-q}`, with symmetric sums over a and b.

    Args:
        n (int): Order of the series, at least 1
        z (complex): Point of the upper half plane
        w (complex): Elliptic variable
        p, q (int, optional): Derivative orders; Default **0**
        bound (int, optional): Number of lattice rows on each side; Default **chosen from Im z**
        tau_pole (float, optional): Smallest allowed distance to the lattice; Default **1e-3**
        tol (float, optional): Largest allowed change between the sums with ``bound // 2`` and ``bound`` rows; Default **None** to skip the check

    Raises:
        PoleProximity: w is within ``tau_pole`` of :math:`\\mathbb{Z}z+\\mathbb{Z}`
        TruncationTooSmall: The sum did not converge within ``tol``
    """
    if n < 1:
        raise ConfigError(f'Twisted Eisenstein series need a positive order [{n}]')
    z, w = complex(z), complex(w)
    distance = pole_distance(z, w)
    if distance < tau_pole:
        raise PoleProximity(f'w={w} lies within {distance:.3e} of the lattice of z={z}')

    A = lattice_bound(z, w, bound)
    a = np.arange(-A, A + 1)
    s = n + p + q
    rows = (a.astype(float) ** p) * inner_sum(s, a * z + w)
    total = np.sum(rows)
    if tol is not None:
        half = np.sum(rows[np.abs(a) <= A // 2])
        if abs(total - half) > tol * (1 + abs(total)):
            raise TruncationTooSmall(f'Twisted Eisenstein sum changed by {abs(total - half):.3e} between {A // 2} and {A} rows')

    rising = math.prod(range(n, n + p + q))
    return complex((-1) ** (p + q) * rising * total)


def twisted_G(n, z, w, bound=None, tau_pole=TAU_POLE, tol=None):
    """ :math:`\\widehat{G}_n(z, w)`, see :func:`twisted_G_partial`. """
    return twisted_G_partial(n, z, w, 0, 0, bound, tau_pole, tol)


def E1hat(z, w, bound=None, tau_pole=TAU_POLE):
    """ :math:`\\widehat{E}_1 = \\frac{i}{2\\pi}\\widehat{G}_1`, for which :math:`\\widehat{E}_1 - v/y` has weight 1 and index 0. """
    return 1j / (2 * np.pi) * twisted_G(1, z, w, bound, tau_pole)


def twisted_G_laurent(n, z, w, terms=12, trunc=40):
    """ Laurent expansion of :math:`\\widehat{G}_n` around w = 0, used as a cross-check for small w.

    .. math::
        \\widehat{G}_n(z,w) = w^{-n} + \\sum_{j \\geq 0, \\, n+j \\text{ even}} (-1)^j \\binom{n+j-1}{j} G_{n+j}(z) w^j

    Args:
        n (int): Order of the series
        z, w (complex): Point; |w| should be well below the shortest lattice vector
        terms (int, optional): Number of powers of w; Default **12**
        trunc (int, optional): q-expansion length of the Eisenstein series; Default **40**
    """
    z, w = complex(z), complex(w)
    total = w ** -n
    for j in range(terms):
        k = n + j
        if k < 2 or k % 2:
            continue
        total += (-1) ** j * math.comb(k - 1, j) * eisenstein_G(k, trunc).evaluate(z) * w ** j
    return complex(total)
