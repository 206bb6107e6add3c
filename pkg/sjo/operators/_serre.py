#
#   Serre type operators built with (twisted) Eisenstein series
#   Copyright EAVISE
#

import logging
import math
import numpy as np

from ..calculus import cofactor
from ..errors import ConfigError
from ..qseries import TAU_POLE, EisensteinMap, TwistedEisensteinMap, E1hatMap
from ..space import DifferentialMap
from ._base import register_operator, degree_one, degree_one_m, check_row, _position, K

__all__ = ['serre_like', 'serre_like_m', 'SERRE_VARIANTS']
log = logging.getLogger(__name__)

pi = math.pi
SERRE_VARIANTS = ('a', 'b', 'c', 'd')


def _variant(variant, allowed):
    variant = str(variant).lower()
    if variant not in allowed:
        raise ConfigError(f'Unknown variant "{variant}", should be one of {allowed}')
    return variant


@register_operator('serre_like', weight=K+2, order=2, dims=degree_one, holomorphic=True, variants={'c': K+1})
def serre_like(f, wi, variant='a', a=-1, b=0, literal=False, free=False, bound=None, tau_pole=TAU_POLE):
    """ Serre type operators on :math:`\\mathbb{H} \\times \\mathbb{C}`.

    The variants are

    - **a**: :math:`\\frac{\\partial^2 f}{\\partial w^2} - 8\\pi i M \\frac{\\partial f}{\\partial z} + 2M(1-2k) G_2 f`
    - **b**: as **a** with the twisted series :math:`\\widehat{G}_2(z, w)` instead of :math:`G_2(z)`
    - **c**: :math:`\\frac{\\partial f}{\\partial w} + 4\\pi i M \\widehat{E}_1 f`, of weight k+1
    - **d**: :math:`\\widehat{E}_1 \\frac{\\partial f}{\\partial w} + \\frac{\\partial f}{\\partial z} + 2\\pi i M \\widehat{E}_1^2 f + \\frac{ik}{2\\pi}(aG_2 + b\\widehat{G}_2) f`

    Args:
        f (sjo.space.SmoothMap): Function on :math:`\\mathbb{H}_{1,1}`
        wi (sjo.space.WeightIndex): Weight and index
        variant (str, optional): One of a, b, c, d; Default **a**
        a (number, optional): Coefficient of :math:`G_2` in variant d; Default **-1**
        b (number, optional): Coefficient of :math:`\\widehat{G}_2` in variant d; Default **0**
        literal (bool, optional): Use the real coefficient :math:`4\\pi M` in variant c; Default **False**
        free (bool, optional): Allow any (a, b) in variant d; Default **False**, which requires :math:`a + b = -1`
        bound (int, optional): Number of lattice rows of the Eisenstein sums; Default **chosen from Im z**
        tau_pole (float, optional): Smallest allowed distance of w to the lattice; Default **1e-3**

    Note:
        The output weight of variant c is k+1, pass the variant to :meth:`~sjo.operators.CovariantOperator.signature`.
        Only variant a preserves holomorphy, the others are meromorphic with poles on :math:`w \\in \\mathbb{Z}z + \\mathbb{Z}`.
    """
    variant = _variant(variant, SERRE_VARIANTS)
    M = wi.M[0, 0]
    k = wi.k
    z, w = _position(1, 1, 'Z'), _position(1, 1, 'W')

    if variant in 'ab':
        G = EisensteinMap(2, 1, bound) if variant == 'a' else TwistedEisensteinMap(2, 1, 0, 1, bound, tau_pole)

        def expression(S, F, G2):
            return F.diff(w).diff(w) - F.diff(z) * (8j * pi * M) + G2 * F * (2 * M * (1 - 2 * k))

        return DifferentialMap([f, G], expression, 2, holomorphic=f.holomorphic and variant == 'a', name=f'serre_{variant}')

    E1 = E1hatMap(1, 0, bound, tau_pole)
    if variant == 'c':
        coefficient = 4 * pi * M if literal else 4j * pi * M

        def expression(S, F, E):
            return F.diff(w) + E * F * coefficient

        return DifferentialMap([f, E1], expression, 1, name='serre_c')

    if not free and not np.isclose(a + b, -1):
        raise ConfigError(f'Variant d needs a + b = -1, pass free=True to use other coefficients [{a} + {b}]')
    inputs = [f, E1, EisensteinMap(2, 1, bound), TwistedEisensteinMap(2, 1, 0, 1, bound, tau_pole)]

    def expression(S, F, E, G2, G2hat):
        anomaly = (G2 * a + G2hat * b) * (1j * k / (2 * pi))
        return E * F.diff(w) + F.diff(z) + F * (E * E * (2j * pi * M) + anomaly)

    return DifferentialMap(inputs, expression, 1, name='serre_d')


@register_operator('serre_like_m', weight=K+2, order=2, dims=degree_one_m, holomorphic=True, variants={'c': K+1})
def serre_like_m(f, wi, variant='a', i=0, row=0, bound=None, tau_pole=TAU_POLE):
    """ Serre type operators on :math:`\\mathbb{H} \\times \\mathbb{C}^m`.

    - **a**: :math:`-8\\pi i |M| \\frac{\\partial f}{\\partial z} + \\sum_{ij} M^*_{ij} \\frac{\\partial^2 f}{\\partial w_i \\partial w_j} + 2|M|(m - 2k) G_2 f`
    - **b**: as **a** with :math:`\\widehat{G}_2(z, w_{row})`
    - **c**: :math:`\\frac{\\partial f}{\\partial w_i} + 4\\pi i \\sum_t M_{it} \\widehat{E}_1(z, w_t) f`, of weight k+1

    Args:
        f (sjo.space.SmoothMap): Function on :math:`\\mathbb{H}_{1,m}`
        wi (sjo.space.WeightIndex): Weight and index
        variant (str, optional): One of a, b, c; Default **a**
        i (int, optional): Elliptic variable of variant c; Default **0**
        row (int, optional): Elliptic variable of the twisted series in variant b; Default **0**
        bound (int, optional): Number of lattice rows of the Eisenstein sums; Default **chosen from Im z**
        tau_pole (float, optional): Smallest allowed distance to the lattice; Default **1e-3**
    """
    variant = _variant(variant, SERRE_VARIANTS[:3])
    m = f.m
    k = wi.k
    z = _position(1, m, 'Z')
    ws = [_position(1, m, 'W', t, 0) for t in range(m)]

    if variant in 'ab':
        check_row(row, m)
        Mstar = np.array(cofactor(wi).evalf(), dtype=float)
        detM = float(wi.det)
        G = EisensteinMap(2, m, bound) if variant == 'a' else TwistedEisensteinMap(2, m, row, 1, bound, tau_pole)

        def expression(S, F, G2):
            dw = [F.diff(p) for p in ws]
            out = F.diff(z) * (-8j * pi * detM) + G2 * F * (2 * detM * (m - 2 * k))
            for s in range(m):
                for t in range(m):
                    if Mstar[s, t] != 0:
                        out = out + dw[s].diff(ws[t]) * Mstar[s, t]
            return out

        return DifferentialMap([f, G], expression, 2, holomorphic=f.holomorphic and variant == 'a', name=f'serre_m_{variant}')

    check_row(i, m)
    Mi = wi.M[i]
    couplings = [t for t in range(m) if Mi[t] != 0]
    inputs = [f] + [E1hatMap(m, t, bound, tau_pole) for t in couplings]

    def expression(S, F, *E):
        out = F.diff(ws[i])
        for t, Et in zip(couplings, E):
            out = out + Et * F * (4j * pi * Mi[t])
        return out

    return DifferentialMap(inputs, expression, 1, name='serre_m_c')
