#
#   Monomial bookkeeping for jets
#   Copyright EAVISE
#

import logging
import math
import threading
from functools import lru_cache
from itertools import combinations_with_replacement, product
import numpy as np

from ..errors import IndexOutOfRange

__all__ = ['JetSpace', 'jet_space']
log = logging.getLogger(__name__)


class JetSpace:
    """ Monomial tables for jets in a fixed number of variables.
    The tables grow on demand when a jet of a higher order is requested.

    Monomials are sorted by total degree, so the monomials of degree at most ``r`` are always the first ``size[r]`` ones.
    This lets a jet of order ``r`` be truncated to a lower order by slicing its coefficient array.

    Args:
        nvars (int): Number of variables

    Attributes:
        self.exponents: Array of shape *(size, nvars)* with the exponents of every monomial
        self.size: List with the number of monomials of degree at most ``r``, for every grown order ``r``

    Note:
        You should not create these objects yourself, but use :func:`~sjo.jet.jet_space` which caches them.
    """
    def __init__(self, nvars):
        if nvars < 0:
            raise ValueError(f'Number of variables should be positive [{nvars}]')

        self.nvars = nvars
        self.order = -1
        self.size = []
        self.exponents = np.zeros((0, nvars), dtype=int)
        self._index = {}
        self._lock = threading.Lock()

        # Product tables: every (p, q) with exp[p] + exp[q] == exp[l], contiguous per l
        self._pair_p = []
        self._pair_q = []
        self._pair_start = []
        self.pair_count = []

        # Substitution tables: monomial l == parent[l] * x_{parent_var[l]}
        self._parent = [0]
        self._parent_var = [-1]

        self.grow(0)

    def __repr__(self):
        return f'{self.__class__.__name__}(nvars={self.nvars}, order={self.order}, size={self.size[-1]})'

    def grow(self, order):
        """ Make sure the tables are available up to a certain order. """
        if order <= self.order:
            return

        with self._lock:
            if order <= self.order:
                return

            exponents = list(map(tuple, self.exponents))
            for degree in range(self.order + 1, order + 1):
                for combo in combinations_with_replacement(range(self.nvars), degree):
                    exp = [0] * self.nvars
                    for v in combo:
                        exp[v] += 1
                    exp = tuple(exp)
                    l = len(exponents)
                    exponents.append(exp)
                    self._index[exp] = l

                    if degree > 0:
                        v = combo[-1]
                        parent = list(exp)
                        parent[v] -= 1
                        self._parent.append(self._index[tuple(parent)])
                        self._parent_var.append(v)

                    self._pair_start.append(len(self._pair_p))
                    for sub in product(*(range(e+1) for e in exp)):
                        self._pair_p.append(self._index[sub])
                        self._pair_q.append(self._index[tuple(e-s for e, s in zip(exp, sub))])

                self.size.append(len(exponents))
                self.pair_count.append(len(self._pair_p))

            # Readers of lower orders do not take the lock, so tables are only published once complete
            table = np.array(exponents, dtype=int).reshape(-1, self.nvars)
            diff = []
            for v in range(self.nvars):
                src = np.nonzero(table[:, v] > 0)[0]
                dst = np.empty_like(src)
                for i, l in enumerate(src):
                    exp = list(exponents[l])
                    exp[v] -= 1
                    dst[i] = self._index[tuple(exp)]
                diff.append((src, dst, table[src, v].astype(float)))

            self.exponents = table
            self.pair_p = np.array(self._pair_p, dtype=np.intp)
            self.pair_q = np.array(self._pair_q, dtype=np.intp)
            self.pair_start = np.array(self._pair_start, dtype=np.intp)
            self.parent = np.array(self._parent, dtype=np.intp)
            self.parent_var = np.array(self._parent_var, dtype=np.intp)
            self.degree = table.sum(axis=1)
            self.factorial = np.array([math.prod(math.factorial(e) for e in exp) for exp in exponents], dtype=float)
            self._diff = diff

            log.debug(f'Grew jet tables for {self.nvars} variables to order {order} [{self.size[-1]} monomials, {self.pair_count[-1]} pairs]')
            self.order = order

    def index(self, exponent):
        """ Position of a monomial in the coefficient arrays. """
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != self.nvars:
            raise IndexOutOfRange(f'Exponent should have {self.nvars} entries [{len(exponent)}]')
        self.grow(sum(exponent))
        try:
            return self._index[exponent]
        except KeyError:
            raise IndexOutOfRange(f'Invalid exponent {exponent}') from None

    def pairs(self, order):
        """ Product tables truncated to a certain order. """
        self.grow(order)
        count = self.pair_count[order]
        return self.pair_p[:count], self.pair_q[:count], self.pair_start[:self.size[order]]

    def diff_table(self, v, order):
        """ Derivative tables with respect to variable ``v`` for a jet of a certain order. """
        if not 0 <= v < self.nvars:
            raise IndexOutOfRange(f'Variable {v} out of range [0, {self.nvars})')
        self.grow(order)
        src, dst, factor = self._diff[v]
        count = np.searchsorted(src, self.size[order])
        return src[:count], dst[:count], factor[:count]


@lru_cache(maxsize=None)
def jet_space(nvars):
    """ Shared :class:`~sjo.jet.JetSpace` for a number of variables. """
    return JetSpace(nvars)
