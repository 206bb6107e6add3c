#
#   Weight and index of Jacobi forms
#   Copyright EAVISE
#

import logging
from fractions import Fraction
import numpy as np
import sympy

from ..errors import InvalidWeightIndex

__all__ = ['WeightIndex']
log = logging.getLogger(__name__)


def _fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (float, np.floating)):
        return Fraction(value).limit_denominator(1 << 20)
    if isinstance(value, sympy.Basic):
        return Fraction(str(sympy.nsimplify(value)))
    return Fraction(value)


class WeightIndex:
    """ Weight :math:`k` and index matrix :math:`M` of a Jacobi form.

    Args:
        k (int): Weight
        M (number or array-like): Symmetric m x m index matrix with rational entries
        validate (bool, optional): Require M to be half-integral; Default **True**

    Attributes:
        self.index: Exact index matrix as a tuple of tuples of :class:`fractions.Fraction`
        self.M: Index matrix as a float numpy array

    Note:
        Half-integral means that 2M has integer entries and the diagonal of M is integral.
        Invertibility of M is checked by the operators that need it.
    """
    def __init__(self, k, M, validate=True):
        if int(k) != k:
            raise InvalidWeightIndex(f'Weight should be an integer [{k}]')
        self.k = int(k)

        if isinstance(M, sympy.MatrixBase):
            M = M.tolist()
        M = np.array(M, dtype=object)
        if M.ndim == 0:
            M = M.reshape(1, 1)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise InvalidWeightIndex(f'Index should be a square matrix [{M.shape}]')

        index = tuple(tuple(_fraction(v) for v in row) for row in M)
        m = len(index)
        for i in range(m):
            for j in range(m):
                if index[i][j] != index[j][i]:
                    raise InvalidWeightIndex(f'Index matrix is not symmetric [{index[i][j]} != {index[j][i]} at ({i}, {j})]')
                if validate and (2 * index[i][j]).denominator != 1:
                    raise InvalidWeightIndex(f'Index matrix is not half-integral [{index[i][j]} at ({i}, {j})]')
            if validate and index[i][i].denominator != 1:
                raise InvalidWeightIndex(f'Index matrix should have an integral diagonal [{index[i][i]} at ({i}, {i})]')

        self.index = index
        self.M = np.array([[float(v) for v in row] for row in index], dtype=float)
        self.M.setflags(write=False)

    @property
    def m(self):
        return len(self.index)

    @property
    def det(self):
        """ Exact determinant of the index matrix. """
        return _fraction(self.sympy().det())

    def sympy(self):
        """ Index matrix as an exact sympy matrix. """
        return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in self.index])

    def scaled(self, factor, shift=0, validate=True):
        """ WeightIndex :math:`(factor \\cdot k + shift, factor \\cdot M)`. """
        return WeightIndex(factor * self.k + shift, [[factor * v for v in row] for row in self.index], validate=validate)

    def with_weight(self, k):
        return WeightIndex(k, self.index, validate=False)

    def __add__(self, other):
        if not isinstance(other, WeightIndex):
            return NotImplemented
        if other.m != self.m:
            raise InvalidWeightIndex(f'Cannot add indices of size {self.m} and {other.m}')
        return WeightIndex(self.k + other.k, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.index, other.index)])

    def __eq__(self, other):
        if not isinstance(other, WeightIndex):
            return NotImplemented
        return self.k == other.k and self.index == other.index

    def __hash__(self):
        return hash((self.k, self.index))

    def __repr__(self):
        index = [[str(v) for v in row] for row in self.index]
        return f'{self.__class__.__name__}(k={self.k}, M={index})'

    def to_json(self):
        return {'k': self.k, 'M': [[str(v) for v in row] for row in self.index]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data['k'], [[Fraction(v) for v in row] for row in data['M']])
        except KeyError as err:
            raise InvalidWeightIndex(f'Missing field {err} in weight/index data') from None
