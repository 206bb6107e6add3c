#
#   Coordinate bookkeeping on the Siegel-Jacobi space
#   Copyright EAVISE
#

import logging
from collections import namedtuple
from functools import lru_cache

from ..errors import IndexOutOfRange

__all__ = ['Coordinate', 'IndexSets', 'index_sets']
log = logging.getLogger(__name__)


Coordinate = namedtuple('Coordinate', ['kind', 'i', 'j'])
Coordinate.__doc__ = """ Complexified coordinate.

Args:
    kind (str): One of ``'Z'``, ``'Zbar'``, ``'W'``, ``'Wbar'``
    i (int): Row index (0-based)
    j (int): Column index (0-based)
"""

KINDS = ('Z', 'Zbar', 'W', 'Wbar')


class IndexSets:
    """ Ordered index sets of the complexified coordinates of :math:`\\mathbb{H}_{n,m}`.

    The coordinate list is :math:`(Z_I)_{I\\in\\Omega} \\oplus (\\overline{Z}_I)_{I\\in\\Omega} \\oplus (W_{I'})_{I'\\in\\Omega'} \\oplus (\\overline{W}_{I'})_{I'\\in\\Omega'}`,
    with :math:`\\Omega = \\{(i,j) | i \\leq j < n\\}` and :math:`\\Omega' = \\{(i',j') | i' < m, j' < n\\}`, both in row-major order.
    The same ordering is used for jet variables, metric matrices and Christoffel dumps.

    Args:
        n (int): Degree
        m (int): Number of rows of W

    Attributes:
        self.omega: List of the :math:`\\Omega` pairs
        self.omega_prime: List of the :math:`\\Omega'` pairs
        self.nvars: Total number of complexified coordinates
    """
    def __init__(self, n, m):
        if n < 1 or m < 1:
            raise IndexOutOfRange(f'n and m should be at least 1 [{n}, {m}]')
        self.n = n
        self.m = m
        self.omega = [(i, j) for i in range(n) for j in range(i, n)]
        self.omega_prime = [(i, j) for i in range(m) for j in range(n)]
        self._omega_pos = {pair: p for p, pair in enumerate(self.omega)}

        self.nz = len(self.omega)
        self.nw = len(self.omega_prime)
        self.nhol = self.nz + self.nw
        self.nvars = 2 * self.nhol
        self.offset = {'Z': 0, 'Zbar': self.nz, 'W': 2 * self.nz, 'Wbar': 2 * self.nz + self.nw}

    def __repr__(self):
        return f'{self.__class__.__name__}(n={self.n}, m={self.m})'

    def omega_index(self, i, j):
        """ Position of the (unordered) pair ``(i, j)`` in :math:`\\Omega`. """
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexOutOfRange(f'Z index ({i}, {j}) out of range for n={self.n}')
        return self._omega_pos[(min(i, j), max(i, j))]

    def omega_prime_index(self, i, j):
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexOutOfRange(f'W index ({i}, {j}) out of range for (m, n)=({self.m}, {self.n})')
        return i * self.n + j

    def position(self, coordinate):
        """ Position of a :class:`~sjo.space.Coordinate` in the complexified coordinate list. """
        kind, i, j = coordinate
        if kind not in self.offset:
            raise IndexOutOfRange(f'Unknown coordinate kind "{kind}", should be one of {KINDS}')
        if kind in ('Z', 'Zbar'):
            return self.offset[kind] + self.omega_index(i, j)
        return self.offset[kind] + self.omega_prime_index(i, j)

    def coordinate(self, position):
        """ Inverse of :meth:`position`. """
        if not 0 <= position < self.nvars:
            raise IndexOutOfRange(f'Coordinate position {position} out of range [0, {self.nvars})')
        for kind in reversed(KINDS):
            if position >= self.offset[kind]:
                local = position - self.offset[kind]
                pair = self.omega[local] if kind in ('Z', 'Zbar') else self.omega_prime[local]
                return Coordinate(kind, *pair)

    def coordinates(self):
        return [self.coordinate(p) for p in range(self.nvars)]

    def conjugate(self, position):
        """ Position of the complex conjugate coordinate. """
        if position < self.nz:
            return position + self.nz
        if position < 2 * self.nz:
            return position - self.nz
        if position < 2 * self.nz + self.nw:
            return position + self.nw
        return position - self.nw

    @staticmethod
    def delta(i, j):
        return 1 if i == j else 0

    def sigma(self, a, b):
        """ 1 if the two Z index pairs denote the same coordinate :math:`Z_{ij} = Z_{ji}`, 0 otherwise. """
        return 1 if (min(a), max(a)) == (min(b), max(b)) else 0

    def label(self, position):
        kind, i, j = self.coordinate(position)
        return f'{kind}[{i},{j}]'


@lru_cache(maxsize=None)
def index_sets(n, m):
    """ Shared :class:`~sjo.space.IndexSets` object. """
    return IndexSets(n, m)
