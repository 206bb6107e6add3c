#
#   Matrix gradients of smooth maps
#   Copyright EAVISE
#

import logging
from dataclasses import dataclass
import numpy as np

from ..errors import OrderTooLow
from ..space import PointJet

__all__ = ['MatrixGradient', 'grad']
log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixGradient:
    """ First order partials of a function, arranged as matrices.

    Attributes:
        dZ: n x n symmetric matrix :math:`\\frac{\\partial f}{\\partial Z}`, entry (i, j) is :math:`\\frac{1+\\delta_{ij}}{2} \\frac{\\partial f}{\\partial z_{ij}}`
        dW: n x m matrix :math:`\\frac{\\partial f}{\\partial W}`, entry (j, i) is :math:`\\frac{\\partial f}{\\partial w_{ij}}`
        dZbar: Conjugate counterpart of dZ
        dWbar: Conjugate counterpart of dW
    """
    dZ: np.ndarray
    dW: np.ndarray
    dZbar: np.ndarray
    dWbar: np.ndarray

    def differential(self, dZ, dW, dZbar=None, dWbar=None):
        """ :math:`Tr(\\frac{\\partial f}{\\partial Z}dZ) + Tr(\\frac{\\partial f}{\\partial W}dW) + \\ldots` for a tangent vector. """
        total = np.trace(self.dZ @ dZ) + np.trace(self.dW @ dW)
        if dZbar is not None:
            total += np.trace(self.dZbar @ dZbar)
        if dWbar is not None:
            total += np.trace(self.dWbar @ dWbar)
        return total


def grad(f, x):
    """ Matrix gradient of a SmoothMap at a point.

    Args:
        f (sjo.space.SmoothMap): Function with exact partials of order 1 or more
        x (sjo.space.SiegelJacobiPoint): Point

    Returns:
        sjo.calculus.MatrixGradient
    """
    if f.order < 1:
        raise OrderTooLow(f'Gradient needs a map of order 1 or more [{f.order}]')
    S = PointJet.seed(x, 1)
    F = f.jet(S)
    return MatrixGradient(S.dZ(F).value, S.dW(F).value, S.dZbar(F).value, S.dWbar(F).value)
