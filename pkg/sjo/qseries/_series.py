#
#   Exact truncated q-expansions
#   Copyright EAVISE
#

import logging
import math
from fractions import Fraction
import numpy as np
import sympy

from ..errors import DimensionMismatch, TruncationTooSmall

__all__ = ['QSeries', 'FourierJacobiSeries', 'TAIL_FACTOR']
log = logging.getLogger(__name__)

TAIL_FACTOR = 10


def _frac(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def _lcm_denominator(values):
    d = 1
    for v in values:
        d = math.lcm(d, v.denominator)
    return d


def _prefactor_ratio(a, b):
    """ Rational ratio of two symbolic prefactors, or None. """
    ratio = sympy.nsimplify(sympy.simplify(a / b))
    if ratio.is_Rational:
        return _frac(ratio)
    return None


def _combine_weight(a, b):
    if a is None or b is None:
        return None
    return a + b


class QSeries:
    """ Truncated expansion :math:`c \\sum_e a(e) q^e` with exact rational coefficients and exponents.

    Args:
        coeffs (dict): Mapping exponent to coefficient; both are converted to :class:`fractions.Fraction`
        trunc (number): Exclusive upper bound of the known exponents
        prefactor (sympy expression, optional): Symbolic constant in front of the series, eg. :math:`(2\\pi i)^k`; Default **1**
        weight (Fraction, optional): Modular weight, tracked through products; Default **None**

    Note:
        Every coefficient with an exponent below ``trunc`` is exact, including the implicit zeros.
        Arithmetic keeps track of the precision, so the result of a product or quotient is only as long as its operands allow.
    """
    def __init__(self, coeffs, trunc, prefactor=1, weight=None):
        self.trunc = _frac(trunc)
        self.coeffs = {}
        for e, c in coeffs.items():
            e, c = _frac(e), _frac(c)
            if c != 0 and e < self.trunc:
                self.coeffs[e] = c
        self.prefactor = sympy.sympify(prefactor)
        self.weight = None if weight is None else _frac(weight)

    @classmethod
    def one(cls, trunc, prefactor=1):
        return cls({0: 1}, trunc, prefactor, weight=0)

    @classmethod
    def monomial(cls, exponent, trunc, coefficient=1):
        return cls({exponent: coefficient}, trunc)

    def __repr__(self):
        terms = ' + '.join(f'({c})q^{e}' for e, c in self.items()[:4])
        return f'{self.__class__.__name__}({self.prefactor} * [{terms} ...], trunc={self.trunc})'

    # Access
    @property
    def dq(self):
        """ Smallest denominator of the exponents. """
        return _lcm_denominator(self.coeffs)

    @property
    def valuation(self):
        """ Lowest exponent with a nonzero coefficient, or ``trunc`` for the zero series. """
        return min(self.coeffs, default=self.trunc)

    def items(self):
        return sorted(self.coeffs.items())

    def __getitem__(self, exponent):
        exponent = _frac(exponent)
        if exponent >= self.trunc:
            raise TruncationTooSmall(f'Coefficient of q^{exponent} is beyond the truncation {self.trunc}')
        return self.coeffs.get(exponent, Fraction(0))

    def is_zero(self):
        return len(self.coeffs) == 0

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        diff = self.truncate(trunc) - other.truncate(trunc)
        return diff.is_zero()

    __hash__ = None

    def truncate(self, trunc):
        trunc = _frac(trunc)
        if trunc > self.trunc:
            raise TruncationTooSmall(f'Cannot extend a series known below q^{self.trunc} to q^{trunc}')
        return QSeries(self.coeffs, trunc, self.prefactor, self.weight)

    def with_prefactor(self, prefactor):
        """ Absorb the current prefactor into the coefficients, given a new prefactor with a rational ratio. """
        prefactor = sympy.sympify(prefactor)
        ratio = _prefactor_ratio(self.prefactor, prefactor)
        if ratio is None:
            raise DimensionMismatch(f'Prefactors {self.prefactor} and {prefactor} do not differ by a rational factor')
        return QSeries({e: c * ratio for e, c in self.coeffs.items()}, self.trunc, prefactor, self.weight)

    # Arithmetic
    def _aligned(self, other):
        if other.prefactor == self.prefactor:
            return self, other
        if self.is_zero():
            return QSeries({}, self.trunc, other.prefactor, self.weight), other
        if other.is_zero():
            return self, QSeries({}, other.trunc, self.prefactor, other.weight)
        return self, other.with_prefactor(self.prefactor)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = QSeries({0: _frac(other)}, self.trunc, self.prefactor)
        a, b = self._aligned(other)
        coeffs = dict(a.coeffs)
        for e, c in b.coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        weight = a.weight if a.weight == b.weight else None
        return QSeries(coeffs, min(a.trunc, b.trunc), a.prefactor, weight)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FourierJacobiSeries):
            return other * self
        if not isinstance(other, QSeries):
            other = _frac(other)
            return QSeries({e: c * other for e, c in self.coeffs.items()}, self.trunc, self.prefactor, self.weight)

        trunc = min(self.valuation + other.trunc, other.valuation + self.trunc)
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < trunc:
                    coeffs[e] = coeffs.get(e, 0) + c1 * c2
        return QSeries(coeffs, trunc, self.prefactor * other.prefactor, _combine_weight(self.weight, other.weight))

    __rmul__ = __mul__

    def reciprocal(self):
        """ Inverse of a series whose lowest coefficient is known, ie. :math:`q^v` times a unit. """
        if self.is_zero():
            raise ZeroDivisionError('Cannot invert a series without known nonzero coefficients')
        v = self.valuation
        lead = self.coeffs[v]
        unit = [(e - v, c / lead) for e, c in self.items() if e > v]
        prec = self.trunc - v

        # 1/u = sum_e b_e q^e with b_0 = 1 and b_e = -sum_s u_s b_{e-s}
        d = _lcm_denominator(s for s, _ in unit)
        inverse = {Fraction(0): Fraction(1)}
        for j in range(1, math.ceil(prec * d)):
            e = Fraction(j, d)
            value = -sum((c * inverse[e - s] for s, c in unit if s <= e and e - s in inverse), Fraction(0))
            if value:
                inverse[e] = value

        weight = None if self.weight is None else -self.weight
        return QSeries({e - v: c / lead for e, c in inverse.items()}, prec - v, 1 / self.prefactor, weight)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.reciprocal()
        return self * (1 / _frac(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            raise TypeError(f'Only integer powers of series are supported [{exponent}]')
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        if exponent == 0:
            return QSeries.one(self.trunc)
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def derivative(self):
        """ :math:`q\\frac{d}{dq}`, which equals :math:`\\frac{1}{2\\pi i}\\frac{d}{d\\tau}` for :math:`q = e^{2\\pi i\\tau}`. """
        weight = None if self.weight is None else self.weight + 2
        return QSeries({e: c * e for e, c in self.coeffs.items()}, self.trunc, self.prefactor, weight)

    def rescale(self, factor):
        """ Substitute :math:`q \\mapsto q^{factor}`. """
        factor = _frac(factor)
        if factor <= 0:
            raise ValueError(f'Rescale factor should be positive [{factor}]')
        return QSeries({e * factor: c for e, c in self.coeffs.items()}, self.trunc * factor, self.prefactor, self.weight)

    # Numerics
    def complex_prefactor(self):
        return complex(sympy.N(self.prefactor, 20))

    def evaluate(self, tau, tol=None):
        """ Numeric value at :math:`\\tau` in the upper half plane.

        Args:
            tau (complex): Point
            tol (float, optional): Largest allowed tail estimate, ie. ten times the magnitude of the terms in the last unit exponent interval; Default **None** to skip the check
        """
        if not self.coeffs:
            return 0j
        exps = np.array([float(e) for e in self.coeffs])
        coefs = np.array([float(c) for c in self.coeffs.values()])
        terms = coefs * np.exp(2j * np.pi * exps * tau)
        if tol is not None:
            tail = TAIL_FACTOR * np.sum(np.abs(terms[exps >= float(self.trunc) - 1]))
            if tail > tol:
                raise TruncationTooSmall(f'Tail estimate {tail:.3e} exceeds {tol:.1e} at trunc {self.trunc}')
        return self.complex_prefactor() * complex(np.sum(terms))


class FourierJacobiSeries:
    """ Truncated Fourier-Jacobi expansion :math:`c \\sum_{n,r} c(n,r) q^n \\zeta^r`, with
    :math:`q = e^{2\\pi i\\tau}` and :math:`\\zeta = e^{2\\pi i z}`.

    Exponents and coefficients are exact fractions and only the q exponent is truncated.

    Args:
        coeffs (dict): Mapping ``(n, r)`` to coefficient
        trunc (number): Exclusive upper bound of the known q exponents
        weight (number, optional): Weight; Default **None**
        index (number, optional): Index; Default **None**
        prefactor (sympy expression, optional): Symbolic constant; Default **1**
    """
    def __init__(self, coeffs, trunc, weight=None, index=None, prefactor=1):
        self.trunc = _frac(trunc)
        self.coeffs = {}
        for (n, r), c in coeffs.items():
            n, r, c = _frac(n), _frac(r), _frac(c)
            if c != 0 and n < self.trunc:
                self.coeffs[(n, r)] = c
        self.weight = None if weight is None else _frac(weight)
        self.index = None if index is None else _frac(index)
        self.prefactor = sympy.sympify(prefactor)

    def __repr__(self):
        return f'{self.__class__.__name__}(weight={self.weight}, index={self.index}, trunc={self.trunc}, terms={len(self.coeffs)})'

    @property
    def dq(self):
        return _lcm_denominator(n for n, _ in self.coeffs)

    @property
    def dz(self):
        return _lcm_denominator(r for _, r in self.coeffs)

    @property
    def valuation(self):
        return min((n for n, _ in self.coeffs), default=self.trunc)

    def items(self):
        return sorted(self.coeffs.items())

    def __getitem__(self, key):
        n, r = _frac(key[0]), _frac(key[1])
        if n >= self.trunc:
            raise TruncationTooSmall(f'Coefficient of q^{n} is beyond the truncation {self.trunc}')
        return self.coeffs.get((n, r), Fraction(0))

    def q_part(self, n):
        """ Laurent polynomial in :math:`\\zeta` multiplying :math:`q^n`, as a dict ``r -> coefficient``. """
        n = _frac(n)
        if n >= self.trunc:
            raise TruncationTooSmall(f'Coefficient of q^{n} is beyond the truncation {self.trunc}')
        return {r: c for (e, r), c in sorted(self.coeffs.items()) if e == n}

    def is_zero(self):
        return len(self.coeffs) == 0

    def __eq__(self, other):
        if not isinstance(other, FourierJacobiSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        return (self.truncate(trunc) - other.truncate(trunc)).is_zero()

    __hash__ = None

    def truncate(self, trunc):
        trunc = _frac(trunc)
        if trunc > self.trunc:
            raise TruncationTooSmall(f'Cannot extend a series known below q^{self.trunc} to q^{trunc}')
        return FourierJacobiSeries(self.coeffs, trunc, self.weight, self.index, self.prefactor)

    def with_prefactor(self, prefactor):
        prefactor = sympy.sympify(prefactor)
        ratio = _prefactor_ratio(self.prefactor, prefactor)
        if ratio is None:
            raise DimensionMismatch(f'Prefactors {self.prefactor} and {prefactor} do not differ by a rational factor')
        return FourierJacobiSeries({k: c * ratio for k, c in self.coeffs.items()}, self.trunc, self.weight, self.index, prefactor)

    def with_signature(self, weight, index):
        return FourierJacobiSeries(self.coeffs, self.trunc, weight, index, self.prefactor)

    # Arithmetic
    def __add__(self, other):
        if not isinstance(other, FourierJacobiSeries):
            if isinstance(other, QSeries):
                other = FourierJacobiSeries({(e, 0): c for e, c in other.coeffs.items()}, other.trunc, other.weight, 0, other.prefactor)
            else:
                other = FourierJacobiSeries({(0, 0): _frac(other)}, self.trunc, prefactor=self.prefactor)
        if other.prefactor == self.prefactor:
            a, b = self, other
        elif self.is_zero():
            a, b = FourierJacobiSeries({}, self.trunc, self.weight, self.index, other.prefactor), other
        elif other.is_zero():
            a, b = self, FourierJacobiSeries({}, other.trunc, other.weight, other.index, self.prefactor)
        else:
            a, b = self, other.with_prefactor(self.prefactor)
        coeffs = dict(a.coeffs)
        for k, c in b.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
        weight = a.weight if a.weight == b.weight else None
        index = a.index if a.index == b.index else None
        return FourierJacobiSeries(coeffs, min(a.trunc, b.trunc), weight, index, a.prefactor)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            trunc = min(self.valuation + other.trunc, other.valuation + self.trunc)
            coeffs = {}
            for (n, r), c1 in self.coeffs.items():
                for e, c2 in other.coeffs.items():
                    if n + e < trunc:
                        key = (n + e, r)
                        coeffs[key] = coeffs.get(key, 0) + c1 * c2
            return FourierJacobiSeries(coeffs, trunc, _combine_weight(self.weight, other.weight), self.index, self.prefactor * other.prefactor)

        if isinstance(other, FourierJacobiSeries):
            trunc = min(self.valuation + other.trunc, other.valuation + self.trunc)
            coeffs = {}
            for (n1, r1), c1 in self.coeffs.items():
                for (n2, r2), c2 in other.coeffs.items():
                    if n1 + n2 < trunc:
                        key = (n1 + n2, r1 + r2)
                        coeffs[key] = coeffs.get(key, 0) + c1 * c2
            return FourierJacobiSeries(
                coeffs, trunc,
                _combine_weight(self.weight, other.weight), _combine_weight(self.index, other.index),
                self.prefactor * other.prefactor,
            )

        other = _frac(other)
        return FourierJacobiSeries({k: c * other for k, c in self.coeffs.items()}, self.trunc, self.weight, self.index, self.prefactor)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.reciprocal()
        return self * (1 / _frac(other))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 1:
            raise TypeError(f'Only positive integer powers of Fourier-Jacobi series are supported [{exponent}]')
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def derivative_q(self):
        """ :math:`q\\frac{\\partial}{\\partial q} = \\frac{1}{2\\pi i}\\frac{\\partial}{\\partial\\tau}`. """
        return FourierJacobiSeries({(n, r): c * n for (n, r), c in self.coeffs.items()}, self.trunc, None, self.index, self.prefactor)

    def derivative_zeta(self):
        """ :math:`\\zeta\\frac{\\partial}{\\partial\\zeta} = \\frac{1}{2\\pi i}\\frac{\\partial}{\\partial z}`. """
        return FourierJacobiSeries({(n, r): c * r for (n, r), c in self.coeffs.items()}, self.trunc, None, self.index, self.prefactor)

    def at_zero(self):
        """ Restriction to :math:`z = 0` as a :class:`QSeries`. """
        coeffs = {}
        for (n, _), c in self.coeffs.items():
            coeffs[n] = coeffs.get(n, 0) + c
        return QSeries(coeffs, self.trunc, self.prefactor, self.weight)

    def is_symmetric(self):
        """ Whether :math:`c(n, r) = c(n, -r)` for every coefficient. """
        return all(self.coeffs.get((n, -r), 0) == c for (n, r), c in self.coeffs.items())

    # Numerics
    def complex_prefactor(self):
        return complex(sympy.N(self.prefactor, 20))

    def arrays(self):
        """ Exponents and coefficients as float arrays ``(n, r, c)``. """
        if not self.coeffs:
            return np.zeros(0), np.zeros(0), np.zeros(0)
        keys = list(self.coeffs)
        n = np.array([float(k[0]) for k in keys])
        r = np.array([float(k[1]) for k in keys])
        c = np.array([float(self.coeffs[k]) for k in keys])
        return n, r, c

    def evaluate(self, tau, z, tol=None):
        """ Numeric value at :math:`(\\tau, z)`.

        Args:
            tau (complex): Point of the upper half plane
            z (complex): Elliptic variable
            tol (float, optional): Largest allowed tail estimate; Default **None** to skip the check
        """
        n, r, c = self.arrays()
        if len(c) == 0:
            return 0j
        terms = c * np.exp(2j * np.pi * (n * tau + r * z))
        if tol is not None:
            tail = TAIL_FACTOR * np.sum(np.abs(terms[n >= float(self.trunc) - 1]))
            if tail > tol:
                raise TruncationTooSmall(f'Tail estimate {tail:.3e} exceeds {tol:.1e} at trunc {self.trunc}')
        return self.complex_prefactor() * complex(np.sum(terms))
