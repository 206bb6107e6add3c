#
#   Invariant differential operators
#   Copyright EAVISE
#

import logging
import numpy as np

from ..errors import ConfigError, IndexOutOfRange
from ..jet import Jet
from ..space import DifferentialMap, ComposedMap, act
from ._base import register_operator

__all__ = [
    'OperatorMatrix', 'InvariantOperator', 'INVARIANT_NAMES',
    'build_invariant', 'A_j', 'H_j', 'T_kl', 'U_kl', 'V_kl', 'YmYp',
]
log = logging.getLogger(__name__)

INVARIANT_NAMES = ('Y+', 'Y-', 'Y+k', 'Y-k', 'X+', 'X-', 'K', 'Lambda', 'Y-Y+')


class OperatorMatrix:
    """ Matrix of differential operators, acting on jets.

    Applying the matrix to a jet F appends its shape to the shape of F.
    Products are compositions: :math:`(AB)_{ac} = \\sum_b A_{ab} \\circ B_{bc}`,
    while coefficient matrices multiply the values after differentiation.

    Args:
        fn (callable): ``fn(S, F) -> Jet`` with S the seeded point jet, appending ``shape`` to the shape of F
        shape (tuple): Shape of the operator matrix, () for scalar operators
        depth (int): Differential order
        name (str, optional): Name
    """
    def __init__(self, fn, shape, depth, name='operator'):
        self.fn = fn
        self.shape = tuple(shape)
        self.depth = depth
        self.name = name

    def __repr__(self):
        return f'{self.__class__.__name__}({self.name}, shape={self.shape}, depth={self.depth})'

    def __call__(self, S, F):
        return self.fn(S, F)

    def __matmul__(self, other):
        if self.shape == () or other.shape == ():
            shape = self.shape + other.shape

            def fn(S, F):
                return self(S, other(S, F))
        else:
            if self.shape[1] != other.shape[0]:
                raise ConfigError(f'Cannot compose operator matrices of shape {self.shape} and {other.shape}')
            shape = (self.shape[0], other.shape[1])

            def fn(S, F):
                return Jet.einsum('...bcab->...ac', self(S, other(S, F)))

        return OperatorMatrix(fn, shape, self.depth + other.depth, f'{self.name}{other.name}')

    def __add__(self, other):
        if self.shape != other.shape:
            raise ConfigError(f'Cannot add operator matrices of shape {self.shape} and {other.shape}')

        def fn(S, F):
            return self(S, F) + other(S, F)

        return OperatorMatrix(fn, self.shape, max(self.depth, other.depth), f'({self.name}+{other.name})')

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, factor):
        def fn(S, F):
            return self(S, F) * factor

        return OperatorMatrix(fn, self.shape, self.depth, self.name)

    __rmul__ = __mul__

    @property
    def T(self):
        def fn(S, F):
            return self(S, F).T

        return OperatorMatrix(fn, self.shape[::-1], self.depth, f'{self.name}^t')

    def trace(self):
        def fn(S, F):
            return Jet.einsum('...aa->...', self(S, F))

        return OperatorMatrix(fn, (), self.depth, f'Tr({self.name})')

    def left(self, coefficient, name='C'):
        """ Multiply the values with a coefficient matrix :math:`C(S)` from the left. """
        def fn(S, F):
            return Jet.einsum('pa,...ab->...pb', coefficient(S), self(S, F))

        return OperatorMatrix(fn, self.shape, self.depth, f'{name}{self.name}')

    def right(self, coefficient, name='C'):
        """ Multiply the values with a coefficient matrix :math:`C(S)` from the right. """
        def fn(S, F):
            return self(S, F) @ coefficient(S)

        return OperatorMatrix(fn, self.shape, self.depth, f'{self.name}{name}')

    def columns(self, cols):
        """ Submatrix of a few columns. """
        cols = list(cols)

        def fn(S, F):
            return self(S, F)[..., :, cols]

        return OperatorMatrix(fn, (self.shape[0], len(cols)), self.depth, self.name)

    def rows(self, rows):
        """ Submatrix of a few rows. """
        rows = list(rows)

        def fn(S, F):
            return self(S, F)[..., rows, :]

        return OperatorMatrix(fn, (len(rows), self.shape[1]), self.depth, self.name)


# Transformation laws, as functions of Q = CZ + D at the point before the action
LAWS = {
    'I': lambda Q: None,
    'Q': lambda Q: Q,
    'Qt': lambda Q: Q.T,
    'Qinv': lambda Q: np.linalg.inv(Q),
    'Qinvt': lambda Q: np.linalg.inv(Q).T,
    'Qbart': lambda Q: Q.conj().T,
    'Qbarinvt': lambda Q: np.linalg.inv(Q.conj()).T,
}


class InvariantOperator:
    """ Operator matrix together with its transformation law under the Jacobi group.

    The law ``(L, R)`` states :math:`Op(\\varphi \\circ g)(x) = L \\, (Op \\, \\varphi)(g \\cdot x) \\, R`
    for every function :math:`\\varphi`, with L and R functions of :math:`Q = CZ + D` (see ``LAWS``).
    Scalar operators and invariant operator matrices have the law ``('I', 'I')``.

    Args:
        name (str): Name
        matrix (sjo.operators.OperatorMatrix): Operator matrix
        law (tuple, optional): Names of the left and right factors; Default **('I', 'I')**
    """
    def __init__(self, name, matrix, law=('I', 'I')):
        self.name = name
        self.matrix = matrix
        self.law = tuple(law)
        for side in self.law:
            if side not in LAWS:
                raise ConfigError(f'Unknown transformation law "{side}", should be one of {list(LAWS)}')

    def __repr__(self):
        return f'{self.__class__.__name__}({self.name}, shape={self.shape}, order={self.order}, law={self.law})'

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def order(self):
        return self.matrix.depth

    @property
    def scalar(self):
        return self.shape == ()

    def apply(self, f):
        """ Apply the operator to a SmoothMap, which should have exact partials up to :attr:`order`. """
        return DifferentialMap([f], self.matrix, self.order, shape=self.shape, name=self.name)

    __call__ = apply

    def expected(self, value, g, x):
        """ Value of :math:`Op(\\varphi \\circ g)(x)` predicted by the law, from :math:`value = (Op\\,\\varphi)(g \\cdot x)`. """
        Q = g.C @ x.Z + g.D
        left, right = LAWS[self.law[0]](Q), LAWS[self.law[1]](Q)
        value = np.asarray(value)
        if left is not None:
            value = left @ value
        if right is not None:
            value = value @ right
        return value

    def law_residual(self, f, g, x):
        """ Largest relative residual of the transformation law for one function, group element and point. """
        lhs = np.asarray(self.apply(ComposedMap(f, g))(x))
        rhs = self.expected(self.apply(f)(act(g, x)), g, x)
        return float(np.max(np.abs(lhs - rhs) / (1 + np.abs(rhs))))


# Elementary first order operators
def _Y(S):
    return S.Y


def _D(S):
    return S.Z - S.Zbar


def _Dinv(S):
    return S.R * -0.5j


def _P(S, F):
    X = S.dW(F) @ (S.V @ S.R)
    return S.dZ(F) + (X + X.T) * 0.5


def _Pbar(S, F):
    X = S.dWbar(F) @ (S.V @ S.R)
    return S.dZbar(F) + (X + X.T) * 0.5


def _Yminus(S, F):
    return S.dWbar(F).T @ S.Y


def _Xminus(S, F):
    return (S.Y @ _Pbar(S, F) @ S.Y) * -2j


def _elementary(name, n, m, k=None):
    if name == 'Y+':
        return OperatorMatrix(lambda S, F: S.dW(F), (n, m), 1, 'Y+'), ('Qinv', 'I')
    if name == 'Y-':
        return OperatorMatrix(_Yminus, (m, n), 1, 'Y-'), ('I', 'Q')
    if name == 'Y+k':
        _check_row(k, m)
        return OperatorMatrix(lambda S, F: S.dW(F), (n, m), 1, f'Y+{k}').columns([k]), ('Qinv', 'I')
    if name == 'Y-k':
        _check_row(k, m)
        return OperatorMatrix(_Yminus, (m, n), 1, f'Y-{k}').rows([k]), ('I', 'Q')
    if name == 'X+':
        return OperatorMatrix(_P, (n, n), 1, 'X+') * 2j, ('Qinv', 'Qinvt')
    if name == 'X-':
        return OperatorMatrix(_Xminus, (n, n), 1, 'X-'), ('Qt', 'Q')
    if name == 'K':
        return (OperatorMatrix(_P, (n, n), 1, 'K') * 2j).left(_Y, 'Y'), ('Qbart', 'Qinvt')
    if name == 'Lambda':
        return (OperatorMatrix(_Pbar, (n, n), 1, 'Lambda') * 2j).left(_Y, 'Y'), ('Qt', 'Qbarinvt')
    if name == 'Y-Y+':
        minus, _ = _elementary('Y-', n, m)
        plus, _ = _elementary('Y+', n, m)
        return minus @ plus, ('I', 'I')
    raise ConfigError(f'Unknown invariant operator "{name}", should be one of {INVARIANT_NAMES}')


def _check_row(k, m):
    if k is None or not 0 <= k < m:
        raise IndexOutOfRange(f'Row {k} out of range [0, {m})')


def build_invariant(name, n, m, k=None):
    """ First order operator matrices.

    ========  ==========================================================================  =================================
    Name      Operator                                                                    Law
    ========  ==========================================================================  =================================
    Y+        :math:`\\frac{\\partial}{\\partial W}` (n x m)                                 :math:`Q^{-1} \\cdot`
    Y-        :math:`(\\frac{\\partial}{\\partial \\overline{W}})^t Y` (m x n)                :math:`\\cdot \\, Q`
    Y+k       column k of Y+                                                              :math:`Q^{-1} \\cdot`
    Y-k       row k of Y-                                                                 :math:`\\cdot \\, Q`
    X+        :math:`2i(\\frac{\\partial}{\\partial Z} + \\frac{1}{2}(X + X^t))`, :math:`X = \\frac{\\partial}{\\partial W} V Y^{-1}`  :math:`Q^{-1} \\cdot Q^{-t}`
    X-        :math:`Y \\overline{X_+} Y`                                                    :math:`Q^t \\cdot Q`
    K         :math:`Y X_+`                                                               :math:`\\overline{Q}^t \\cdot Q^{-t}`
    Lambda    :math:`Y \\overline{X_+}`                                                     :math:`Q^t \\cdot \\overline{Q}^{-t}`
    Y-Y+      composition of Y- and Y+ (m x m, second order)                              invariant
    ========  ==========================================================================  =================================

    Args:
        name (str): Operator name
        n (int): Degree
        m (int): Number of rows of W
        k (int, optional): Row for Y+k and Y-k
    """
    matrix, law = _elementary(name, n, m, k)
    return InvariantOperator(name if k is None else f'{name}[{k}]', matrix, law)


def _A(j, n, m):
    if j < 1:
        raise ConfigError(f'A_j needs j >= 1 [{j}]')
    Lam = _elementary('Lambda', n, m)[0]
    Kop = _elementary('K', n, m)[0]
    A1 = Lam @ Kop + Kop * ((n + 1) / 2)
    A = A1
    for _ in range(j - 1):
        twisted = (Lam.T @ A.T).T.left(_Dinv, 'D^-1').T.left(_D, 'D')
        A = A1 @ A - (Lam @ A) * ((n + 1) / 2) + (Lam @ A.trace()) * 0.5 + twisted * 0.5
    A.name = f'A{j}'
    return A


def A_j(j, n, m):
    """ Operator matrix :math:`A^{(j)}`, with :math:`A^{(1)} = \\Lambda K + \\frac{n+1}{2} K` and

    .. math::
        A^{(j)} = A^{(1)}A^{(j-1)} - \\frac{n+1}{2}\\Lambda A^{(j-1)} + \\frac{1}{2}\\Lambda \\, Tr(A^{(j-1)})
        + \\frac{1}{2}(Z-\\overline{Z})\\left((Z-\\overline{Z})^{-1}(\\Lambda^t A^{(j-1)t})^t\\right)^t

    Its transformation law is :math:`Q^t \\cdot Q^{-t}`, so that the trace is invariant.
    """
    return InvariantOperator(f'A{j}', _A(j, n, m), ('Qt', 'Qinvt'))


def H_j(j, n, m):
    """ Invariant operator :math:`H^j = Tr(A^{(j)})` of order 2j. """
    return InvariantOperator(f'H{j}', _A(j, n, m).trace())


def T_kl(j, k, l, n, m):
    """ Invariant operator :math:`Tr(Y_{-,k}^t Y_{+,l}^t A^{(j)})` of order 2j+2. """
    _check_row(k, m)
    _check_row(l, m)
    minus = _elementary('Y-k', n, m, k)[0]
    plus = _elementary('Y+k', n, m, l)[0]
    return InvariantOperator(f'T{j}[{k},{l}]', (minus.T @ plus.T @ _A(j, n, m)).trace())


def U_kl(k, l, n, m):
    """ Invariant operator :math:`Tr(Y_{-,k}^t Y_{-,l} X_+)` of order 3. """
    _check_row(k, m)
    _check_row(l, m)
    minus_k = _elementary('Y-k', n, m, k)[0]
    minus_l = _elementary('Y-k', n, m, l)[0]
    plus = _elementary('X+', n, m)[0]
    return InvariantOperator(f'U[{k},{l}]', (minus_k.T @ minus_l @ plus).trace())


def V_kl(k, l, n, m):
    """ Invariant operator :math:`Tr(Y_{+,k} Y_{+,l}^t X_-)` of order 3. """
    _check_row(k, m)
    _check_row(l, m)
    plus_k = _elementary('Y+k', n, m, k)[0]
    plus_l = _elementary('Y+k', n, m, l)[0]
    minus = _elementary('X-', n, m)[0]
    return InvariantOperator(f'V[{k},{l}]', (plus_k @ plus_l.T @ minus).trace())


def YmYp(k, l, n, m):
    """ Entry (k, l) of the invariant operator matrix :math:`Y_-Y_+`, a second order invariant operator. """
    _check_row(k, m)
    _check_row(l, m)
    matrix = _elementary('Y-Y+', n, m)[0].rows([k]).columns([l])

    def fn(S, F):
        return matrix(S, F)[..., 0, 0]

    return InvariantOperator(f'Y-Y+[{k},{l}]', OperatorMatrix(fn, (), matrix.depth, matrix.name))


# Scalar invariants in the operator registry, acting on functions of weight 0 and index 0
@register_operator('H_j', weight=0, index_scale=0, order=2, invariant=True)
def _H_op(f, wi, j=1):
    """ :math:`H^j = Tr(A^{(j)})`, see :func:`~sjo.operators.H_j`. """
    return H_j(j, f.n, f.m).apply(f)


@register_operator('T_kl', weight=0, index_scale=0, order=4, invariant=True)
def _T_op(f, wi, j=1, k=0, l=0):
    """ :math:`Tr(Y_{-,k}^t Y_{+,l}^t A^{(j)})`, see :func:`~sjo.operators.T_kl`. """
    return T_kl(j, k, l, f.n, f.m).apply(f)


@register_operator('U_kl', weight=0, index_scale=0, order=3, invariant=True)
def _U_op(f, wi, k=0, l=0):
    """ :math:`Tr(Y_{-,k}^t Y_{-,l} X_+)`, see :func:`~sjo.operators.U_kl`. """
    return U_kl(k, l, f.n, f.m).apply(f)


@register_operator('V_kl', weight=0, index_scale=0, order=3, invariant=True)
def _V_op(f, wi, k=0, l=0):
    """ :math:`Tr(Y_{+,k} Y_{+,l}^t X_-)`, see :func:`~sjo.operators.V_kl`. """
    return V_kl(k, l, f.n, f.m).apply(f)


@register_operator('YmYp', weight=0, index_scale=0, order=2, invariant=True)
def _YmYp_op(f, wi, k=0, l=0):
    """ Entry (k, l) of :math:`Y_-Y_+`, see :func:`~sjo.operators.YmYp`. """
    return YmYp(k, l, f.n, f.m).apply(f)
