#
#   Truncated Taylor series arithmetic
#   Copyright EAVISE
#

import logging
import math
from itertools import permutations
from numbers import Number
import numpy as np

from ..errors import OrderTooLow, DimensionMismatch
from ._space import JetSpace, jet_space

__all__ = ['Jet']
log = logging.getLogger(__name__)


def _permutation_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


class Jet:
    """ Array of truncated Taylor series in ``space.nvars`` variables.

    The coefficient array has shape ``(*shape, space.size[order])``:
    the leading axes hold the (matrix) shape of the function and the last axis the Taylor coefficients,
    so that ``coef[..., l]`` multiplies the monomial ``space.exponents[l]`` of the displacement from the expansion point.

    Args:
        space (sjo.jet.JetSpace): Monomial tables
        order (int): Truncation order
        coef (array-like): Coefficients

    Note:
        Jets combine with python numbers, numpy arrays and other jets of the same space.
        Arrays broadcast against the leading shape of the jet and combining two jets truncates to the lowest order. |br|
        Matrix multiplication with ``@`` follows numpy semantics on the leading shape.

    Note:
        Numpy ufuncs are disabled on jets, so that ``array * jet`` dispatches to :meth:`__rmul__` instead of creating object arrays.
    """
    __array_ufunc__ = None
    __slots__ = ('space', 'order', 'coef')

    def __init__(self, space, order, coef):
        if not isinstance(space, JetSpace):
            space = jet_space(space)
        space.grow(order)
        coef = np.asarray(coef, dtype=complex)
        if coef.ndim == 0 or coef.shape[-1] != space.size[order]:
            raise DimensionMismatch(f'Jet of order {order} in {space.nvars} variables needs {space.size[order]} coefficients [{coef.shape}]')

        self.space = space
        self.order = order
        self.coef = coef

    @classmethod
    def constant(cls, space, order, value):
        """ Jet of a constant (array) value. """
        if not isinstance(space, JetSpace):
            space = jet_space(space)
        space.grow(order)
        value = np.asarray(value, dtype=complex)
        coef = np.zeros(value.shape + (space.size[order],), dtype=complex)
        coef[..., 0] = value
        return cls(space, order, coef)

    @classmethod
    def variable(cls, space, order, v, value=0):
        """ Jet of the coordinate function ``x_v``, expanded around ``value``. """
        if not isinstance(space, JetSpace):
            space = jet_space(space)
        jet = cls.constant(space, order, value)
        if order > 0:
            jet.coef[1 + v] = 1
        return jet

    @classmethod
    def stack(cls, jets, axis=0):
        """ Stack jets along a new leading axis. """
        jets = list(jets)
        if len(jets) == 0:
            raise ValueError('Need at least one jet to stack')
        space = jets[0].space
        order = min(j.order for j in jets)
        size = space.size[order]
        if axis < 0:
            axis -= 1
        return cls(space, order, np.stack([j.coef[..., :size] for j in jets], axis=axis))

    @classmethod
    def einsum(cls, subscripts, *operands):
        """ Einstein summation over the leading axes of jets and arrays.
        At most two operands are supported and the subscripts may only refer to the leading axes.

        Example:
            >>> trace = Jet.einsum('ii->', matrix_jet)  # doctest: +SKIP
        """
        inputs, output = subscripts.replace(' ', '').split('->')
        inputs = inputs.split(',')
        if len(inputs) != len(operands) or len(operands) > 2:
            raise ValueError(f'Invalid einsum specification "{subscripts}" for {len(operands)} operands')
        jets = [o for o in operands if isinstance(o, Jet)]
        if len(jets) == 0:
            raise TypeError('einsum needs at least one jet operand')
        space = jets[0].space
        order = min(j.order for j in jets)
        size = space.size[order]

        if len(jets) == 2:
            p, q, start = space.pairs(order)
            a, b = operands
            gathered = np.einsum(f'{inputs[0]}z,{inputs[1]}z->{output}z', a.coef[..., p], b.coef[..., q])
            return cls(space, order, np.add.reduceat(gathered, start, axis=-1))

        spec = [i + 'z' if isinstance(o, Jet) else i for i, o in zip(inputs, operands)]
        args = [o.coef[..., :size] if isinstance(o, Jet) else np.asarray(o) for o in operands]
        return cls(space, order, np.einsum(f'{",".join(spec)}->{output}z', *args))

    def __repr__(self):
        return f'{self.__class__.__name__}(nvars={self.space.nvars}, order={self.order}, shape={self.shape})'

    @property
    def shape(self):
        return self.coef.shape[:-1]

    @property
    def ndim(self):
        return self.coef.ndim - 1

    @property
    def value(self):
        """ Constant term, ie. the value at the expansion point. """
        return self.coef[..., 0]

    @property
    def T(self):
        """ Swap the last two leading axes. """
        if self.ndim < 2:
            raise DimensionMismatch(f'Need at least 2 leading axes to transpose [{self.shape}]')
        return Jet(self.space, self.order, np.swapaxes(self.coef, -2, -3))

    def copy(self):
        return Jet(self.space, self.order, self.coef.copy())

    def truncate(self, order):
        """ Drop every coefficient of degree above ``order``. """
        if order > self.order:
            raise OrderTooLow(f'Cannot truncate jet of order {self.order} to order {order}')
        return Jet(self.space, order, self.coef[..., :self.space.size[order]])

    def __getitem__(self, key):
        if not isinstance(key, tuple):
            key = (key,)
        return Jet(self.space, self.order, self.coef[key + (slice(None),)])

    def __len__(self):
        return self.shape[0]

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], tuple):
            shape = shape[0]
        return Jet(self.space, self.order, self.coef.reshape(tuple(shape) + (self.coef.shape[-1],)))

    def sum(self, axis=None):
        """ Sum over leading axes. """
        if axis is None:
            axis = tuple(range(self.ndim))
        elif isinstance(axis, int):
            axis = (axis,)
        axis = tuple(a if a >= 0 else a - 1 for a in axis)
        return Jet(self.space, self.order, self.coef.sum(axis=axis))

    def trace(self):
        """ Trace over the last two leading axes. """
        return Jet(self.space, self.order, np.trace(self.coef, axis1=-3, axis2=-2))

    def diff(self, v):
        """ Partial derivative with respect to variable ``v``, which lowers the order by one. """
        if self.order < 1:
            raise OrderTooLow(f'Cannot differentiate a jet of order {self.order}')
        src, dst, factor = self.space.diff_table(v, self.order)
        coef = np.zeros(self.shape + (self.space.size[self.order-1],), dtype=complex)
        coef[..., dst] = self.coef[..., src] * factor
        return Jet(self.space, self.order-1, coef)

    def derivative(self, exponent):
        """ Value of a partial derivative at the expansion point. """
        exponent = tuple(exponent)
        if sum(exponent) > self.order:
            raise OrderTooLow(f'Jet of order {self.order} cannot give derivatives of order {sum(exponent)}')
        l = self.space.index(exponent)
        return self.coef[..., l] * self.space.factorial[l]

    # Arithmetic
    def _binary_order(self, other):
        if isinstance(other, Jet):
            if other.space is not self.space:
                raise DimensionMismatch(f'Cannot combine jets in {self.space.nvars} and {other.space.nvars} variables')
            return min(self.order, other.order)
        return self.order

    def __neg__(self):
        return Jet(self.space, self.order, -self.coef)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Jet):
            order = self._binary_order(other)
            size = self.space.size[order]
            return Jet(self.space, order, self.coef[..., :size] + other.coef[..., :size])

        other = np.asarray(other, dtype=complex)
        shape = np.broadcast_shapes(self.shape, other.shape)
        coef = np.array(np.broadcast_to(self.coef, shape + self.coef.shape[-1:]), dtype=complex)
        coef[..., 0] += other
        return Jet(self.space, self.order, coef)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            order = self._binary_order(other)
            p, q, start = self.space.pairs(order)
            return Jet(self.space, order, np.add.reduceat(self.coef[..., p] * other.coef[..., q], start, axis=-1))

        other = np.asarray(other)
        return Jet(self.space, self.order, self.coef * other[..., None])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        other = np.asarray(other)
        return Jet(self.space, self.order, self.coef / other[..., None])

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, exponent):
        return self.power(exponent)

    def __matmul__(self, other):
        if isinstance(other, Jet):
            order = self._binary_order(other)
            p, q, start = self.space.pairs(order)
            gathered = np.einsum('...ikz,...kjz->...ijz', self.coef[..., p], other.coef[..., q])
            return Jet(self.space, order, np.add.reduceat(gathered, start, axis=-1))

        other = np.asarray(other)
        return Jet(self.space, self.order, np.einsum('...ikz,...kj->...ijz', self.coef, other))

    def __rmatmul__(self, other):
        other = np.asarray(other)
        return Jet(self.space, self.order, np.einsum('...ik,...kjz->...ijz', other, self.coef))

    # Analytic functions
    def _nilpotent(self):
        coef = self.coef.copy()
        coef[..., 0] = 0
        return Jet(self.space, self.order, coef)

    def _series(self, coefficients):
        """ Evaluate :math:`\\sum_j a_j N^j` with ``N`` the part of the jet without constant term. """
        result = Jet.constant(self.space, self.order, coefficients[0])
        if self.order == 0:
            return result
        nil = self._nilpotent()
        power = nil
        for j in range(1, self.order + 1):
            if j > 1:
                power = power * nil
            result = result + power * coefficients[j]
        return result

    def reciprocal(self):
        c = self.value
        if np.any(c == 0):
            raise ZeroDivisionError('Cannot take the reciprocal of a jet with a zero constant term')
        return self._series([(-1) ** j / c ** (j + 1) for j in range(self.order + 1)])

    def exp(self):
        c = np.exp(self.value)
        return self._series([c / math.factorial(j) for j in range(self.order + 1)])

    def log(self):
        c = self.value
        coefficients = [np.log(c)] + [(-1) ** (j + 1) / (j * c ** j) for j in range(1, self.order + 1)]
        return self._series(coefficients)

    def power(self, exponent):
        """ Raise to a power, using repeated multiplication for natural exponents. """
        if isinstance(exponent, (int, np.integer)):
            if exponent < 0:
                return self.reciprocal().power(-exponent)
            result = Jet.constant(self.space, self.order, np.ones(self.shape))
            base = self
            while exponent:
                if exponent & 1:
                    result = result * base
                exponent >>= 1
                if exponent:
                    base = base * base
            return result

        if not isinstance(exponent, Number):
            raise TypeError(f'Exponent should be a number [{type(exponent)}]')
        c = self.value
        coefficients = []
        binom = 1
        for j in range(self.order + 1):
            coefficients.append(binom * c ** (exponent - j))
            binom = binom * (exponent - j) / (j + 1)
        return self._series(coefficients)

    # Matrix functions
    def inv(self):
        """ Inverse of a (stack of) square matrix jet(s). """
        if self.ndim < 2 or self.shape[-1] != self.shape[-2]:
            raise DimensionMismatch(f'Can only invert square matrices [{self.shape}]')
        a0inv = np.linalg.inv(self.value)
        step = -(a0inv @ self._nilpotent())
        term = Jet.constant(self.space, self.order, a0inv)
        result = term
        for _ in range(self.order):
            term = step @ term
            result = result + term
        return result

    def det(self):
        """ Determinant of a (stack of) square matrix jet(s). """
        if self.ndim < 2 or self.shape[-1] != self.shape[-2]:
            raise DimensionMismatch(f'Can only take the determinant of square matrices [{self.shape}]')
        n = self.shape[-1]
        result = Jet.constant(self.space, self.order, np.zeros(self.shape[:-2]))
        if n == 0:
            return result + 1
        for perm in permutations(range(n)):
            term = self[..., 0, perm[0]]
            for i in range(1, n):
                term = term * self[..., i, perm[i]]
            result = result + term * _permutation_sign(perm)
        return result

    # Substitution
    def substitute(self, displacements):
        """ Compose with a change of variables.

        Args:
            displacements (list of sjo.jet.Jet): One scalar jet per variable of this jet, giving the displacement from its expansion point; Their constant terms should be zero

        Returns:
            sjo.jet.Jet: Jet in the space of the displacement jets, truncated to the lowest order involved
        """
        if len(displacements) != self.space.nvars:
            raise DimensionMismatch(f'Need {self.space.nvars} displacements [{len(displacements)}]')
        if self.space.nvars == 0:
            raise DimensionMismatch('Cannot substitute into a jet without variables')
        target = displacements[0].space
        order = min(self.order, min(d.order for d in displacements))
        displacements = [d.truncate(order) for d in displacements]
        count = self.space.size[order]

        powers = [Jet.constant(target, order, 1)]
        for l in range(1, count):
            powers.append(powers[self.space.parent[l]] * displacements[self.space.parent_var[l]])
        powers = np.stack([p.coef for p in powers], axis=0)

        return Jet(target, order, np.tensordot(self.coef[..., :count], powers, axes=([-1], [0])))
