#
#   Finite difference oracle
#   Copyright EAVISE
#

import logging
from collections import namedtuple
from itertools import product
import numpy as np

from ..errors import StepUnderflow, OrderTooLow
from ..space import SiegelJacobiPoint, index_sets

__all__ = ['fd_oracle', 'FDEstimate', 'default_step']
log = logging.getLogger(__name__)

FDEstimate = namedtuple('FDEstimate', ['value', 'error'])
FDEstimate.__doc__ = """ Finite difference estimate with the step halving error estimate. """

MIN_STEP = 1e-8
STEP = {1: 1e-4, 2: 1e-3, 3: 3e-3, 4: 1e-2}


def default_step(order, coordinate=0):
    """ Step size for a derivative of a certain order around a coordinate value. """
    return STEP[max(order, 1)] * (1 + abs(coordinate))


def _real_directions(idx, position):
    """ Real directions (dZ, dW) of the real and imaginary part of a complexified coordinate, and the Wirtinger weights. """
    kind, i, j = idx.coordinate(position)
    n, m = idx.n, idx.m
    directions = []
    for part in (1, 1j):
        dZ = np.zeros((n, n), dtype=complex)
        dW = np.zeros((m, n), dtype=complex)
        if kind in ('Z', 'Zbar'):
            dZ[i, j] = dZ[j, i] = part
        else:
            dW[i, j] = part
        directions.append((dZ, dW))

    # d/dxi = (d/ds - i d/dt) / 2 and d/dxibar = (d/ds + i d/dt) / 2
    sign = -1 if kind in ('Z', 'W') else 1
    return directions, (0.5, 0.5j * sign)


def fd_oracle(f, x, index, step=None):
    """ Central difference estimate of a mixed partial with Richardson extrapolation.

    Every complexified coordinate derivative is expanded in real derivatives of the real and imaginary parts (Wirtinger convention).
    Mixed real derivatives use products of central differences with steps h and h/2,
    which are combined as :math:`(4D(h/2) - D(h))/3`.

    Args:
        f (sjo.space.SmoothMap): Function, only evaluated at genuine points
        x (sjo.space.SiegelJacobiPoint): Point
        index (list): Coordinates to differentiate, see :meth:`sjo.space.SmoothMap.partial`
        step (float, optional): Base step h; Default depends on the order and the size of the coordinates

    Returns:
        sjo.calculus.FDEstimate: Value and the difference between the extrapolated and the h/2 estimate
    """
    idx = index_sets(x.n, x.m)
    positions = [idx.position(c) if isinstance(c, tuple) else int(c) for c in index]
    order = len(positions)
    if order > 4:
        raise OrderTooLow(f'Finite difference oracle supports derivatives up to order 4 [{order}]')
    if order == 0:
        return FDEstimate(complex(f(x)), 0.0)

    if step is None:
        scale = max(np.max(np.abs(x.Z)), np.max(np.abs(x.W)))
        step = default_step(order, scale)
    if step / 2 < MIN_STEP:
        raise StepUnderflow(f'Finite difference step {step:.3e} below {MIN_STEP:.1e}')

    expansions = [_real_directions(idx, p) for p in positions]

    def estimate(h):
        total = 0
        for choice in product((0, 1), repeat=order):
            weight = 1
            dirs = []
            for (directions, weights), c in zip(expansions, choice):
                weight *= weights[c]
                dirs.append(directions[c])
            total += weight * _mixed_difference(f, x, dirs, h)
        return total

    coarse = estimate(step)
    fine = estimate(step / 2)
    value = (4 * fine - coarse) / 3
    return FDEstimate(complex(value), float(abs(value - fine)))


def _mixed_difference(f, x, directions, h):
    total = 0
    for signs in product((1, -1), repeat=len(directions)):
        dZ = sum(s * d[0] for s, d in zip(signs, directions))
        dW = sum(s * d[1] for s, d in zip(signs, directions))
        total += np.prod(signs) * f(SiegelJacobiPoint(x.Z + h * dZ, x.W + h * dW))
    return total / (2 * h) ** len(directions)
