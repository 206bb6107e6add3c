#
#   Covariant operators on H x C
#   Copyright EAVISE
#

import logging
import math

from ..space import DifferentialMap
from ._base import register_operator, degree_one, _position, K

__all__ = ['D1', 'heat_Lkm', 'heat_hol', 'D2', 'delta1', 'delta2']
log = logging.getLogger(__name__)

pi = math.pi
Z, ZBAR, W, WBAR = (_position(1, 1, kind) for kind in ('Z', 'Zbar', 'W', 'Wbar'))


@register_operator('D1', weight=K+1, dims=degree_one)
def D1(f, wi):
    """ :math:`D_1 f = \\frac{\\partial f}{\\partial w} + 4\\pi i M \\frac{v}{y} f`, from weight k to k+1. """
    M = wi.M[0, 0]

    def expression(S, F):
        return F.diff(W) + F * (S.V[0, 0] * S.R[0, 0]) * (4j * pi * M)

    return DifferentialMap([f], expression, 1, name='D1')


def _heat(f, wi, full, name):
    M = wi.M[0, 0]
    k = wi.k

    def expression(S, F):
        out = F.diff(W).diff(W) - F.diff(Z) * (8j * pi * M)
        if full:
            out = out + F * S.R[0, 0] * (2 * M * pi - 4 * M * pi * k)
        return out

    return DifferentialMap([f], expression, 2, holomorphic=f.holomorphic and not full, name=name)


@register_operator('heat_Lkm', weight=K+2, order=2, dims=degree_one)
def heat_Lkm(f, wi):
    """ Non-holomorphic heat operator
    :math:`L_{k,M} f = \\frac{\\partial^2 f}{\\partial w^2} - 8\\pi i M \\frac{\\partial f}{\\partial z} + \\frac{2M\\pi - 4M\\pi k}{y} f`.
    """
    return _heat(f, wi, True, 'heat_Lkm')


@register_operator('heat_hol', weight=K+2, order=2, dims=degree_one, holomorphic=True)
def heat_hol(f, wi):
    """ Holomorphic part :math:`L_M = \\frac{\\partial^2}{\\partial w^2} - 8\\pi i M \\frac{\\partial}{\\partial z}` of the heat operator.

    Note:
        This part alone is not covariant, it is exposed for the q-expansion correspondence and the Serre type operators.
    """
    return _heat(f, wi, False, 'heat_hol')


@register_operator('D2', weight=K+2, dims=degree_one)
def D2(f, wi):
    """ :math:`D_2 f = \\frac{v}{y}\\frac{\\partial f}{\\partial w} + \\frac{\\partial f}{\\partial z} + 2\\pi i M \\frac{v^2}{y^2} f - \\frac{ik}{2y} f`. """
    M = wi.M[0, 0]
    k = wi.k

    def expression(S, F):
        vr = S.V[0, 0] * S.R[0, 0]
        return vr * F.diff(W) + F.diff(Z) + F * (vr * vr * (2j * pi * M) - S.R[0, 0] * (0.5j * k))

    return DifferentialMap([f], expression, 1, name='D2')


@register_operator('delta1', weight=K-1, dims=degree_one)
def delta1(f, wi):
    """ :math:`\\delta_1 f = y \\frac{\\partial f}{\\partial \\bar{w}}`. """
    def expression(S, F):
        return S.Y[0, 0] * F.diff(WBAR)

    return DifferentialMap([f], expression, 1, name='delta1')


@register_operator('delta2', weight=K-2, dims=degree_one)
def delta2(f, wi):
    """ :math:`\\delta_2 f = y^2 \\frac{\\partial f}{\\partial \\bar{z}} + vy \\frac{\\partial f}{\\partial \\bar{w}}`. """
    def expression(S, F):
        y = S.Y[0, 0]
        return y * y * F.diff(ZBAR) + S.V[0, 0] * y * F.diff(WBAR)

    return DifferentialMap([f], expression, 1, name='delta2')
