#
#   Rankin-Cohen type brackets of two Jacobi forms
#   Copyright EAVISE
#

import logging
import math
from fractions import Fraction

from ..errors import ConfigError, DimensionMismatch
from ..space import DifferentialMap, WeightIndex
from ._base import register_operator, any_degree, K1, K2, NDEG
from ._general import heat_matrix, inverse_index

__all__ = ['bracket', 'bracket_candidates']
log = logging.getLogger(__name__)

pi = math.pi


@register_operator('bracket', weight=NDEG*(K1+K2)+1, index_scale=NDEG, arity=2, order=2, dims=any_degree, variants={'b': NDEG*(K1+K2)+2})
def bracket(f, wi1, g, wi2, variant='a'):
    """ Bracket of two functions.

    - **a**: :math:`\\det\\left(\\frac{\\partial f}{\\partial W} M_2 g - \\frac{\\partial g}{\\partial W} M_1 f\\right)`, only for n = m
    - **b**: :math:`\\det\\left((m - 2k_2) g H_{M_1}(f) - (m - 2k_1) f H_{M_2}(g)\\right)`,
      with :math:`H_M(f) = -8\\pi i \\frac{\\partial f}{\\partial Z} + \\frac{\\partial}{\\partial W} M^{-1} (\\frac{\\partial f}{\\partial W})^t` the holomorphic heat matrix

    Args:
        f (sjo.space.SmoothMap): First function
        wi1 (sjo.space.WeightIndex): Weight and index of f
        g (sjo.space.SmoothMap): Second function
        wi2 (sjo.space.WeightIndex): Weight and index of g
        variant (str, optional): a or b; Default **a**

    Note:
        Both variants have index :math:`n(M_1 + M_2)`.
        Variant a has weight :math:`n(k_1+k_2)+1` and variant b :math:`n(k_1+k_2)+2`.
        The non-holomorphic :math:`Y^{-1}` terms of the heat operators cancel in variant b, so they are left out.
    """
    variant = str(variant).lower()
    n, m = f.n, f.m
    holomorphic = f.holomorphic and g.holomorphic

    if variant == 'a':
        if n != m:
            raise DimensionMismatch(f'Bracket a needs n = m [n={n}, m={m}]')
        M1, M2 = wi1.M, wi2.M

        def expression(S, F, G):
            return (S.dW(F) @ M2 * G - S.dW(G) @ M1 * F).det()

        return DifferentialMap([f, g], expression, 1, holomorphic, name='bracket_a')

    if variant == 'b':
        Minv1, Minv2 = inverse_index(wi1), inverse_index(wi2)
        c1, c2 = m - 2 * wi2.k, m - 2 * wi1.k

        def expression(S, F, G):
            return (heat_matrix(S, F, Minv1) * G * c1 - heat_matrix(S, G, Minv2) * F * c2).det()

        return DifferentialMap([f, g], expression, 2, holomorphic, name='bracket_b')

    raise ConfigError(f'Unknown bracket variant "{variant}", should be a or b')


def bracket_candidates(wi1, wi2, n):
    """ Candidate output signatures of the brackets.

    The weights :math:`k_1+k_2+1`, :math:`n(k_1+k_2)+2` and :math:`n(k_1+k_2+2)` are combined with the indices
    :math:`nM_1M_2` and :math:`n(M_1+M_2)`.

    Returns:
        list: ``(label, WeightIndex)`` tuples, without duplicates
    """
    k1, k2 = wi1.k, wi2.k
    weights = [('k1+k2+1', k1 + k2 + 1), ('n(k1+k2)+2', n * (k1 + k2) + 2), ('n(k1+k2+2)', n * (k1 + k2 + 2))]

    product = (wi1.sympy() * wi2.sympy() * n).tolist()
    summed = (wi1.sympy() + wi2.sympy()) * n
    indices = [
        ('nM1M2', [[Fraction(str(v)) for v in row] for row in product]),
        ('n(M1+M2)', [[Fraction(str(v)) for v in row] for row in summed.tolist()]),
    ]

    out = []
    seen = set()
    for wlabel, k in weights:
        for ilabel, M in indices:
            wi = WeightIndex(k, M, validate=False)
            if wi in seen:
                continue
            seen.add(wi)
            out.append((f'{wlabel}, {ilabel}', wi))
    return out
