#
#   Covariant operators on H x C^m
#   Copyright EAVISE
#

import logging
import math
import numpy as np

from ..calculus import cofactor
from ..jet import Jet
from ..space import DifferentialMap
from ._base import register_operator, degree_one_m, check_row, _position, K

__all__ = ['D1_i', 'delta1_i', 'heat_m', 'heat_m_hol', 'D2_m', 'delta2_m']
log = logging.getLogger(__name__)

pi = math.pi


def _w(m, i, kind='W'):
    return _position(1, m, kind, i, 0)


def _v(S):
    """ Column :math:`(v_1, ..., v_m)` as a jet of shape (m,). """
    return S.V[:, 0]


@register_operator('D1_i', weight=K+1, dims=degree_one_m)
def D1_i(f, wi, i=0):
    """ :math:`D_{1,i} f = \\frac{\\partial f}{\\partial w_i} + 4\\pi i \\left(\\sum_t M_{it} \\frac{v_t}{y}\\right) f`.

    Args:
        f (sjo.space.SmoothMap): Function on :math:`\\mathbb{H}_{1,m}`
        wi (sjo.space.WeightIndex): Weight and index
        i (int, optional): Elliptic variable; Default **0**
    """
    check_row(i, f.m)
    Mi = wi.M[i]
    pos = _w(f.m, i)

    def expression(S, F):
        coupling = (_v(S) * Mi).sum() * S.R[0, 0]
        return F.diff(pos) + F * coupling * (4j * pi)

    return DifferentialMap([f], expression, 1, name=f'D1_{i}')


@register_operator('delta1_i', weight=K-1, dims=degree_one_m)
def delta1_i(f, wi, i=0):
    """ :math:`\\delta_{1,i} f = y \\frac{\\partial f}{\\partial \\bar{w}_i}`. """
    check_row(i, f.m)
    pos = _w(f.m, i, 'Wbar')

    def expression(S, F):
        return S.Y[0, 0] * F.diff(pos)

    return DifferentialMap([f], expression, 1, name=f'delta1_{i}')


def _heat_m(f, wi, full, name):
    m = f.m
    Mstar = np.array(cofactor(wi).evalf(), dtype=float)
    detM = float(wi.det)
    k = wi.k
    z = _position(1, m, 'Z')
    ws = [_w(m, i) for i in range(m)]

    def expression(S, F):
        dw = [F.diff(p) for p in ws]
        out = F.diff(z) * (-8j * pi * detM)
        for i in range(m):
            for j in range(m):
                if Mstar[i, j] != 0:
                    out = out + dw[i].diff(ws[j]) * Mstar[i, j]
        if full:
            out = out + F * S.R[0, 0] * (2 * m * detM * pi - 4 * detM * pi * k)
        return out

    return DifferentialMap([f], expression, 2, holomorphic=f.holomorphic and not full, name=name)


@register_operator('heat_m', weight=K+2, order=2, dims=degree_one_m)
def heat_m(f, wi):
    """ Heat operator
    :math:`L_{k,M} f = \\sum_{i,j} M^*_{ij} \\frac{\\partial^2 f}{\\partial w_i \\partial w_j} - 8\\pi i |M| \\frac{\\partial f}{\\partial z} + \\frac{2m|M|\\pi - 4|M|\\pi k}{y} f`,
    with :math:`M^*` the cofactor matrix of M.

    Note:
        The operator is well defined for singular M, in which case the first order and constant terms vanish.
    """
    return _heat_m(f, wi, True, 'heat_m')


@register_operator('heat_m_hol', weight=K+2, order=2, dims=degree_one_m, holomorphic=True)
def heat_m_hol(f, wi):
    """ Holomorphic part :math:`\\sum_{i,j} M^*_{ij} \\partial_{w_i}\\partial_{w_j} - 8\\pi i |M| \\partial_z` of :func:`heat_m`. """
    return _heat_m(f, wi, False, 'heat_m_hol')


@register_operator('D2_m', weight=K+2, dims=degree_one_m)
def D2_m(f, wi):
    """ :math:`\\frac{\\partial f}{\\partial z} + \\sum_i \\frac{v_i}{y}\\frac{\\partial f}{\\partial w_i} + 2\\pi i \\frac{v^tMv}{y^2} f - \\frac{ik}{2y} f`. """
    m = f.m
    M = wi.M
    k = wi.k
    z = _position(1, m, 'Z')
    ws = [_w(m, i) for i in range(m)]

    def expression(S, F):
        v = _v(S)
        r = S.R[0, 0]
        out = F.diff(z)
        for i in range(m):
            out = out + v[i] * r * F.diff(ws[i])
        vMv = (v * Jet.einsum('ij,j->i', M, v)).sum()
        return out + F * (vMv * r * r * (2j * pi) - r * (0.5j * k))

    return DifferentialMap([f], expression, 1, name='D2_m')


@register_operator('delta2_m', weight=K-2, dims=degree_one_m)
def delta2_m(f, wi):
    """ :math:`y^2 \\frac{\\partial f}{\\partial \\bar{z}} + y \\sum_i v_i \\frac{\\partial f}{\\partial \\bar{w}_i}`. """
    m = f.m
    zbar = _position(1, m, 'Zbar')
    wbars = [_w(m, i, 'Wbar') for i in range(m)]

    def expression(S, F):
        y = S.Y[0, 0]
        v = _v(S)
        out = y * y * F.diff(zbar)
        for i in range(m):
            out = out + y * v[i] * F.diff(wbars[i])
        return out

    return DifferentialMap([f], expression, 1, name='delta2_m')

