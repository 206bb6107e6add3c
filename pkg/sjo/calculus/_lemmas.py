#
#   Derivative identities of the invariant kernel
#   Copyright EAVISE
#

import logging
import math
import numpy as np
import sympy

from ..errors import OrderTooLow, SingularIndex, IndexOutOfRange, DimensionMismatch
from ..space import PointJet, JetMap, WeightIndex, rng

__all__ = [
    'grad_trace_MVRV_W', 'grad_R_Z', 'grad_trace_MVRV_Z', 'grad_detY_Z', 'grad_log_kernel',
    'hessian_W_kernel', 'cofactor', 'cofactor_trace_identity_check', 'kernel_map', 'TAU_INDEX',
]
log = logging.getLogger(__name__)

TAU_INDEX = 1e-12


def _index(M):
    if isinstance(M, WeightIndex):
        return M.M
    M = np.array(M, dtype=float)
    return M.reshape(1, 1) if M.ndim == 0 else M


def grad_trace_MVRV_W(x, M):
    """ :math:`\\frac{\\partial}{\\partial W} Tr(MVY^{-1}V^t) = -i Y^{-1}V^tM`, an n x m matrix. """
    return -1j * x.R @ x.V.T @ _index(M)


def grad_R_Z(x):
    """ Derivatives of the entries of :math:`R = Y^{-1}` with respect to the coordinates :math:`z_{kl}`.

    Returns:
        numpy.ndarray: Array ``d[s, t, k, l]`` equal to :math:`2^{-\\delta(k,l)-1} i (R_{kt}R_{sl} + R_{ks}R_{tl})`
    """
    R = x.R
    n = x.n
    d = 0.5j * (np.einsum('kt,sl->stkl', R, R) + np.einsum('ks,tl->stkl', R, R))
    d[:, :, np.arange(n), np.arange(n)] *= 0.5
    return d


def grad_trace_MVRV_Z(x, M):
    """ :math:`\\frac{\\partial}{\\partial Z} Tr(MVY^{-1}V^t) = \\frac{i}{2} Y^{-1}V^tMVY^{-1}`. """
    R = x.R
    return 0.5j * R @ x.V.T @ _index(M) @ x.V @ R


def grad_detY_Z(x):
    """ :math:`\\frac{\\partial}{\\partial Z} \\det(Y) = -\\frac{i}{2}\\det(Y)Y^{-1}`. """
    return -0.5j * np.linalg.det(x.Y) * x.R


def grad_log_kernel(x, wi):
    """ Z and W gradients of :math:`\\log h_1` for :math:`h_1 = \\det(Y)^k e^{-4\\pi Tr(MVY^{-1}V^t)}`. """
    dZ = wi.k * grad_detY_Z(x) / np.linalg.det(x.Y) - 4 * math.pi * grad_trace_MVRV_Z(x, wi)
    dW = -4 * math.pi * grad_trace_MVRV_W(x, wi)
    return dZ, dW


def kernel_map(wi, n):
    """ The kernel :math:`h_1 = \\det(Y)^k e^{-4\\pi Tr(MVY^{-1}V^t)}` as a SmoothMap. """
    M = wi.M

    def h1(P):
        V = P.V
        return P.Y.det().power(wi.k) * ((-4 * math.pi) * (M @ V @ P.R @ V.T).trace()).exp()

    return JetMap(h1, n, wi.m)


def hessian_W_kernel(f, x, wi, i, j):
    """ Second W derivatives of :math:`f h_1`, divided by :math:`h_1`.

    Args:
        f (sjo.space.SmoothMap): Function of order 2 or more
        x (sjo.space.SiegelJacobiPoint): Point
        wi (sjo.space.WeightIndex): Weight and index of the kernel
        i, j (int): Rows of W (0-based)

    Returns:
        numpy.ndarray: n x n matrix whose (k, l) entry is
        :math:`\\frac{\\partial^2 f}{\\partial w_{jk}\\partial w_{il}} + 4\\pi i(MVR)_{il} f_{w_{jk}} + 4\\pi i(MVR)_{jk} f_{w_{il}} - 16\\pi^2(MVR)_{il}(MVR)_{jk}f + 2\\pi M_{ij}R_{kl}f`
    """
    if f.order < 2:
        raise OrderTooLow(f'Kernel hessian needs a map of order 2 or more [{f.order}]')
    if not (0 <= i < x.m and 0 <= j < x.m):
        raise IndexOutOfRange(f'Rows ({i}, {j}) out of range for m={x.m}')

    S = PointJet.seed(x, 2)
    F = f.jet(S)
    dW = S.dW(F)
    fw = dW.value                       # fw[b, a] = df/dw_ab
    fww = S.dW(dW).value                # fww[b, a, d, c] = d2f/dw_ab dw_cd
    f0 = F.value
    MVR = wi.M @ x.V @ x.R
    pi = math.pi

    return (
        fww[:, j, :, i]
        + 4j * pi * MVR[i, None, :] * fw[:, j, None]
        + 4j * pi * MVR[j, :, None] * fw[None, :, i]
        - 16 * pi**2 * MVR[i, None, :] * MVR[j, :, None] * f0
        + 2 * pi * wi.M[i, j] * x.R * f0
    )


def cofactor(M):
    """ Exact cofactor matrix :math:`M^*` with :math:`M^*_{ij} = (-1)^{i+j} \\det(M \\text{ without row i and column j})`.

    Args:
        M (sjo.space.WeightIndex, sympy.Matrix or array-like): Square matrix

    Returns:
        sympy.Matrix
    """
    if isinstance(M, WeightIndex):
        M = M.sympy()
    elif not isinstance(M, sympy.MatrixBase):
        M = sympy.Matrix(np.array(M, dtype=object).tolist()).applyfunc(sympy.nsimplify)
    if M.rows != M.cols:
        raise DimensionMismatch(f'Cofactor needs a square matrix [{M.shape}]')
    if M.rows == 1:
        return sympy.Matrix([[1]])
    return M.adjugate().T


def cofactor_trace_identity_check(f, x, M, seed=0):
    """ Residual of :math:`Tr(\\sum_{ij} M^*_{ij} \\frac{\\partial^2 f}{\\partial W_i \\partial W_j} S) = |M| Tr(\\frac{\\partial}{\\partial W} M^{-1} (\\frac{\\partial f}{\\partial W})^t S)`.

    Here :math:`\\frac{\\partial^2 f}{\\partial W_i \\partial W_j}` is the n x n matrix with entries :math:`\\frac{\\partial^2 f}{\\partial w_{ik}\\partial w_{jl}}`
    and S a random symmetric direction matrix.

    Args:
        f (sjo.space.SmoothMap): Function of order 2 or more
        x (sjo.space.SiegelJacobiPoint): Point
        M (sjo.space.WeightIndex or array-like): Index matrix
        seed (int, optional): Seed of the direction matrix; Default **0**

    Returns:
        float: Absolute residual
    """
    if f.order < 2:
        raise OrderTooLow(f'Cofactor identity needs a map of order 2 or more [{f.order}]')
    Mf = _index(M)
    detM = np.linalg.det(Mf)
    if abs(detM) < TAU_INDEX:
        raise SingularIndex(f'Index matrix is singular [det {detM:.3e}]')
    Mstar = np.array(cofactor(M).evalf(), dtype=float)

    S = PointJet.seed(x, 2)
    F = f.jet(S)
    fww = S.dW(S.dW(F)).value                   # fww[b, a, d, c] = d2f/dw_ab dw_cd
    second = np.einsum('kilj->ijkl', fww)       # second[i, j, k, l] = d2f/dw_ik dw_jl

    gen = rng(seed)
    direction = gen.normal(size=(x.n, x.n))
    direction = direction + direction.T

    lhs = np.trace(np.einsum('ij,ijkl->kl', Mstar, second) @ direction)
    rhs = detM * np.trace(np.einsum('ij,ijkl->kl', np.linalg.inv(Mf), second) @ direction)
    return float(abs(lhs - rhs))
