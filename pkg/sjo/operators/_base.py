#
#   Base operator structure and registry
#   Copyright EAVISE
#

import logging
from collections import OrderedDict
import numpy as np
import sympy

from ..errors import ConfigError, DimensionMismatch, InvalidWeightIndex, IndexOutOfRange
from ..space import WeightIndex, Coordinate, index_sets

__all__ = [
    'CovariantOperator', 'OPERATORS', 'register_operator', 'get_operator', 'list_operators',
    'degree_one', 'degree_one_m', 'any_degree', 'square', 'K', 'K1', 'K2', 'NDEG',
]
log = logging.getLogger(__name__)

K, K1, K2, NDEG = sympy.symbols('k k1 k2 n')
OPERATORS = OrderedDict()


def degree_one(n, m):
    return n == 1 and m == 1


def degree_one_m(n, m):
    return n == 1


def any_degree(n, m):
    return n <= m


def square(n, m):
    return n == m


def _position(n, m, kind, i=0, j=0):
    return index_sets(n, m).position(Coordinate(kind, i, j))


class CovariantOperator:
    """ Differential operator mapping Jacobi forms of one weight and index to another.

    The operator is applied with :meth:`__call__`, which checks the dimensions and returns a :class:`~sjo.space.SmoothMap`.
    The output signature follows from :meth:`signature`, as :math:`(k', M') = (k_{out}, scale \\cdot \\sum M_i)`.

    Args:
        name (str): Name in the registry
        fn (callable): ``fn(f, wi, **kwargs)`` for unary operators, ``fn(f, wi1, g, wi2, **kwargs)`` for brackets
        weight (sympy expression): Output weight in the symbols k (or k1, k2) and n
        index_scale (sympy expression, optional): Output index as a multiple of the (summed) input index; Default **1**
        order (int, optional): Differential order; Default **1**
        arity (int, optional): Number of function arguments; Default **1**
        dims (callable, optional): ``dims(n, m) -> bool`` with the spaces the operator is defined on; Default **any degree**
        holomorphic (bool, optional): Whether the operator preserves holomorphy; Default **False**
        invariant (bool, optional): Operator acts on invariant functions, ie. weight 0 and index 0; Default **False**
        variants (dict, optional): Output weight per variant, for operators that take a ``variant`` option; Default **None**
    """
    def __init__(self, name, fn, weight, index_scale=1, order=1, arity=1, dims=any_degree, holomorphic=False, invariant=False, variants=None):
        self.name = name
        self.fn = fn
        self.weight = sympy.sympify(weight)
        self.index_scale = sympy.sympify(index_scale)
        self.order = order
        self.arity = arity
        self.dims = dims
        self.holomorphic = holomorphic
        self.invariant = invariant
        self.variants = {k: sympy.sympify(v) for k, v in (variants or {}).items()}
        self.__doc__ = fn.__doc__

    def __repr__(self):
        return f'{self.__class__.__name__}({self.name}, weight={self.weight}, index_scale={self.index_scale}, order={self.order})'

    def supports(self, n, m):
        return bool(self.dims(n, m))

    def signature(self, wis, n, variant=None):
        """ Output weight and index.

        Args:
            wis (sjo.space.WeightIndex or list): Input weight(s) and index(es)
            n (int): Degree
            variant (str, optional): Operator variant; Default **None**

        Returns:
            sjo.space.WeightIndex
        """
        if isinstance(wis, WeightIndex):
            wis = [wis]
        if len(wis) != self.arity:
            raise ConfigError(f'{self.name} takes {self.arity} weight/index pairs [{len(wis)}]')

        if self.arity == 1:
            subs = {K: wis[0].k, NDEG: n}
        else:
            subs = {K1: wis[0].k, K2: wis[1].k, NDEG: n}
        weight = self.variants.get(variant, self.weight) if variant is not None else self.weight
        weight = weight.subs(subs)
        scale = self.index_scale.subs({NDEG: n})
        if not (weight.is_Integer and scale.is_Rational):
            raise InvalidWeightIndex(f'Output signature of {self.name} is not numeric [{weight}, {scale}]')

        index = sum((np.array(wi.index, dtype=object) for wi in wis[1:]), np.array(wis[0].index, dtype=object))
        scale = sympy.Rational(scale)
        index = [[v * int(scale.p) / int(scale.q) for v in row] for row in index]
        return WeightIndex(int(weight), index, validate=False)

    def _check(self, fs, wis):
        n, m = fs[0].n, fs[0].m
        if not self.supports(n, m):
            raise DimensionMismatch(f'{self.name} is not defined on H_{{{n},{m}}}')
        for f, wi in zip(fs, wis):
            if (f.n, f.m) != (n, m):
                raise DimensionMismatch(f'{self.name} needs all functions on H_{{{n},{m}}} [{f.n}, {f.m}]')
            if wi.m != m:
                raise DimensionMismatch(f'{self.name} needs an index of size {m} [{wi.m}]')
            if self.invariant and (wi.k != 0 or np.any(wi.M)):
                raise InvalidWeightIndex(f'{self.name} acts on invariant functions, ie. weight 0 and index 0 [{wi}]')

    def __call__(self, *args, **kwargs):
        """ Apply the operator.

        Args:
            *args: ``f, wi`` or ``f, wi1, g, wi2``
            **kwargs: Operator options, eg. ``rows`` or ``variant``
        """
        if len(args) != 2 * self.arity:
            raise ConfigError(f'{self.name} takes {self.arity} (function, weight/index) pairs [{len(args)} arguments]')
        fs, wis = args[0::2], args[1::2]
        self._check(fs, wis)
        return self.fn(*args, **kwargs)

    def to_json(self, n, m):
        return {
            'name': self.name,
            'n': n,
            'm': m,
            'arity': self.arity,
            'k_out': str(self.weight.subs(NDEG, n)),
            'index_scale': str(self.index_scale.subs(NDEG, n)),
            'order': self.order,
        }


def register_operator(name, weight, **kwargs):
    """ Decorator that wraps a function in a :class:`~sjo.operators.CovariantOperator` and adds it to :data:`OPERATORS`.

    Example:
        >>> @register_operator('twice', weight=K, order=0)   # doctest: +SKIP
        ... def twice(f, wi):
        ...     return f * 2
    """
    def decorator(fn):
        if name in OPERATORS:
            raise ConfigError(f'Operator {name} is already registered')
        op = CovariantOperator(name, fn, weight, **kwargs)
        OPERATORS[name] = op
        return op

    return decorator


def get_operator(name):
    try:
        return OPERATORS[name]
    except KeyError:
        raise ConfigError(f'Unknown operator "{name}", should be one of {list(OPERATORS)}') from None


def list_operators(n=None, m=None):
    """ Registered operators, optionally restricted to the ones defined on :math:`\\mathbb{H}_{n,m}`. """
    if n is None:
        return list(OPERATORS.values())
    return [op for op in OPERATORS.values() if op.supports(n, m)]


def check_row(i, m):
    if not 0 <= i < m:
        raise IndexOutOfRange(f'Row {i} out of range [0, {m})')


__all__ += ['check_row']


@register_operator('identity', weight=K, order=0)
def identity(f, wi):
    """ Identity operator, which trivially intertwines every slash action. """
    return f


__all__ += ['identity']
