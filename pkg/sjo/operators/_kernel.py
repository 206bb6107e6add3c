#
#   Invariant kernel of a weight and index
#   Copyright EAVISE
#

import logging

from ..calculus import kernel_map
from ..errors import DimensionMismatch
from ..space import act, automorphy_factor

__all__ = ['weight_kernel', 'invariant_density', 'kernel_transform_residual']
log = logging.getLogger(__name__)


def weight_kernel(wi, n, m=None):
    """ The kernel :math:`h_1 = \\det(Y)^k e^{-4\\pi Tr(MVY^{-1}V^t)}` as a SmoothMap.
    In degree one this is :math:`y^k e^{-4\\pi M v^2 / y}`.

    Args:
        wi (sjo.space.WeightIndex): Weight and index
        n (int): Degree
        m (int, optional): Number of rows of W, checked against the index; Default **wi.m**
    """
    if m is not None and m != wi.m:
        raise DimensionMismatch(f'Index of size {wi.m} does not fit on H_{{{n},{m}}}')
    return kernel_map(wi, n)


def invariant_density(f, wi, x):
    """ :math:`|f(x)|^2 h_1(x)`, which is invariant when f is a Jacobi form of weight k and index M. """
    h1 = weight_kernel(wi, x.n)
    return abs(f(x))**2 * h1(x).real


def kernel_transform_residual(wi, g, x):
    """ Relative residual of :math:`h_1(g \\cdot x) = |J(g, x)|^{-2} h_1(x)`. """
    h1 = weight_kernel(wi, x.n)
    lhs = h1(act(g, x)).real
    rhs = h1(x).real / abs(complex(automorphy_factor(g, x, wi)))**2
    return abs(lhs - rhs) / (1 + abs(rhs))
