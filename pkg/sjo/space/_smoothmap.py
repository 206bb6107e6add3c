#
#   Smooth functions on the Siegel-Jacobi space
#   Copyright EAVISE
#

import logging
import math
from abc import ABC, abstractmethod
import numpy as np

from ..errors import OrderTooLow, DimensionMismatch, IndexOutOfRange
from ..jet import Jet
from ._action import act, automorphy_factor
from ._indexsets import Coordinate, index_sets
from ._pointjet import PointJet

__all__ = [
    'SmoothMap', 'ConstantMap', 'CoordinateMap', 'JetMap', 'ComposedMap', 'SlashedMap',
    'ScaledMap', 'ProductMap', 'SumMap', 'DifferentialMap', 'slash',
]
log = logging.getLogger(__name__)


class SmoothMap(ABC):
    """ Complex valued smooth function on :math:`\\mathbb{H}_{n,m}` with exact partial derivatives.

    Subclasses implement :meth:`jet`, which evaluates the function on a :class:`~sjo.space.PointJet`.
    Evaluating on a seeded point jet gives the Taylor expansion in the complexified coordinates,
    from which every mixed partial up to the jet order follows exactly.

    Args:
        n (int): Degree
        m (int): Number of rows of W
        order (int or math.inf, optional): Highest order of partial derivatives that is exact; Default **math.inf**
        holomorphic (bool, optional): Whether the function is holomorphic; Default **False**
        shape (tuple, optional): Shape of the value for matrix valued maps; Default **()**
    """
    def __init__(self, n, m, order=math.inf, holomorphic=False, shape=()):
        self.n = n
        self.m = m
        self.order = order
        self.holomorphic = holomorphic
        self.shape = tuple(shape)

    def __repr__(self):
        return f'{self.__class__.__name__}(n={self.n}, m={self.m}, order={self.order}, holomorphic={self.holomorphic})'

    @abstractmethod
    def jet(self, P):
        """ Evaluate on a point jet.

        Args:
            P (sjo.space.PointJet): Point jet with order at most ``self.order``

        Returns:
            sjo.jet.Jet: Jet in the variables of P, with leading shape ``self.shape``
        """

    def _check(self, x):
        if (x.n, x.m) != (self.n, self.m):
            raise DimensionMismatch(f'{self.__class__.__name__} lives on H_{{{self.n},{self.m}}}, got a point of H_{{{x.n},{x.m}}}')
        if isinstance(x, PointJet) and x.order > self.order:
            raise OrderTooLow(f'{self.__class__.__name__} has exact partials up to order {self.order}, requested {x.order}')

    def __call__(self, x):
        """ Value at a point. """
        value = self.jet(PointJet.seed(x, 0)).value
        return complex(value) if self.shape == () else value

    def taylor(self, x, order):
        """ Taylor expansion of a certain order around x, in the complexified coordinates of :class:`~sjo.space.IndexSets`. """
        if order > self.order:
            raise OrderTooLow(f'{self.__class__.__name__} has exact partials up to order {self.order}, requested {order}')
        return self.jet(PointJet.seed(x, order))

    def partial(self, x, index):
        """ Mixed partial derivative at a point.

        Args:
            x (sjo.space.SiegelJacobiPoint): Point
            index (list): Coordinates to differentiate to, either positions in the complexified coordinate list or :class:`~sjo.space.Coordinate` tuples; repetitions give higher derivatives

        Note:
            The Z coordinates are the independent entries :math:`z_{ij}, i \\leq j`,
            so the derivative with respect to an off-diagonal entry moves both :math:`Z_{ij}` and :math:`Z_{ji}`.
        """
        idx = index_sets(self.n, self.m)
        exponent = [0] * idx.nvars
        for coordinate in index:
            pos = idx.position(coordinate) if isinstance(coordinate, tuple) else int(coordinate)
            if not 0 <= pos < idx.nvars:
                raise IndexOutOfRange(f'Coordinate position {pos} out of range [0, {idx.nvars})')
            exponent[pos] += 1
        value = self.taylor(x, len(index)).derivative(exponent)
        return complex(value) if self.shape == () else value

    # Algebra
    def __add__(self, other):
        return SumMap(self, other)

    def __sub__(self, other):
        return SumMap(self, ScaledMap(other, -1))

    def __mul__(self, other):
        if isinstance(other, SmoothMap):
            return ProductMap(self, other)
        return ScaledMap(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return ScaledMap(self, -1)


class ConstantMap(SmoothMap):
    """ Constant function. """
    def __init__(self, value, n, m):
        super().__init__(n, m, holomorphic=True, shape=np.shape(value))
        self.value = np.asarray(value, dtype=complex)

    def jet(self, P):
        self._check(P)
        return Jet.constant(P.space, P.order, self.value)


class CoordinateMap(SmoothMap):
    """ A single complexified coordinate, eg. ``CoordinateMap(Coordinate('W', 0, 1), n, m)``. """
    def __init__(self, coordinate, n, m):
        coordinate = Coordinate(*coordinate)
        index_sets(n, m).position(coordinate)
        super().__init__(n, m, holomorphic=coordinate.kind in ('Z', 'W'))
        self.coordinate = coordinate

    def jet(self, P):
        self._check(P)
        kind, i, j = self.coordinate
        matrix = {'Z': P.Z, 'Zbar': P.Zbar, 'W': P.W, 'Wbar': P.Wbar}[kind]
        return matrix[i, j]


class JetMap(SmoothMap):
    """ SmoothMap defined by a function acting on point jets.

    Args:
        fn (callable): Function ``fn(P) -> Jet`` built from the jet arithmetic, eg. ``lambda P: P.Z.det()``
        n, m (int): Dimensions
        order, holomorphic, shape: See :class:`~sjo.space.SmoothMap`
    """
    def __init__(self, fn, n, m, order=math.inf, holomorphic=False, shape=()):
        super().__init__(n, m, order, holomorphic, shape)
        self.fn = fn

    def jet(self, P):
        self._check(P)
        return self.fn(P)


class ComposedMap(SmoothMap):
    """ Pullback :math:`\\varphi \\circ g` of a function by the action of a group element. """
    def __init__(self, phi, g):
        super().__init__(phi.n, phi.m, phi.order, phi.holomorphic, phi.shape)
        self.phi = phi
        self.g = g

    def jet(self, P):
        self._check(P)
        return self.phi.jet(act(self.g, P))


class SlashedMap(SmoothMap):
    """ Slash action :math:`(f|_{k,M}g)(x) = J_{k,M}(g,x)^{-1} f(g \\cdot x)`. """
    def __init__(self, f, g, wi, literal=False):
        super().__init__(f.n, f.m, f.order, f.holomorphic, f.shape)
        self.f = f
        self.g = g
        self.wi = wi
        self.literal = literal

    def jet(self, P):
        self._check(P)
        return self.f.jet(act(self.g, P)) / automorphy_factor(self.g, P, self.wi, self.literal)


def slash(f, g, wi, literal=False):
    """ Slash action of a group element on a SmoothMap.

    Args:
        f (sjo.space.SmoothMap): Function
        g (sjo.space.JacobiGroupElement): Group element
        wi (sjo.space.WeightIndex): Weight and index
        literal (bool, optional): Factor of automorphy convention, see :func:`~sjo.space.automorphy_factor`; Default **False**

    Returns:
        sjo.space.SmoothMap: Function of the same declared order, whose partials follow from the chain rule through the action
    """
    if g.is_identity():
        return f
    return SlashedMap(f, g, wi, literal)


class ScaledMap(SmoothMap):
    def __init__(self, f, factor):
        super().__init__(f.n, f.m, f.order, f.holomorphic, f.shape)
        self.f = f
        self.factor = factor

    def jet(self, P):
        return self.f.jet(P) * self.factor


class SumMap(SmoothMap):
    def __init__(self, f, g):
        super().__init__(f.n, f.m, min(f.order, g.order), f.holomorphic and g.holomorphic, f.shape)
        self.f = f
        self.g = g

    def jet(self, P):
        return self.f.jet(P) + self.g.jet(P)


class ProductMap(SmoothMap):
    """ Pointwise product of two maps. """
    def __init__(self, f, g):
        super().__init__(f.n, f.m, min(f.order, g.order), f.holomorphic and g.holomorphic, f.shape)
        self.f = f
        self.g = g

    def jet(self, P):
        return self.f.jet(P) * self.g.jet(P)


class DifferentialMap(SmoothMap):
    """ Result of a differential operator applied to one or more maps.

    The operator is evaluated on a seed of order ``P.order + depth`` at the expansion point of P,
    then the resulting jet is composed with P. The exact order of the result is therefore
    the lowest order of the inputs minus the depth of the operator.

    Args:
        inputs (list of sjo.space.SmoothMap): Operands
        expression (callable): ``expression(S, *jets) -> Jet`` with S the seeded :class:`~sjo.space.PointJet` and the operand jets on S
        depth (int): Differential order of the operator
        holomorphic (bool, optional): Whether the result is holomorphic; Default **False**
        shape (tuple, optional): Shape of the result; Default **()**
        name (str, optional): Name used in messages
    """
    def __init__(self, inputs, expression, depth, holomorphic=False, shape=(), name=None):
        inputs = list(inputs)
        order = min(f.order for f in inputs) - depth
        self.name = name if name is not None else getattr(expression, '__name__', 'operator')
        if order < 0:
            raise OrderTooLow(f'{self.name} needs inputs with exact partials up to order {depth} [{min(f.order for f in inputs)}]')
        super().__init__(inputs[0].n, inputs[0].m, order, holomorphic, shape)
        self.inputs = inputs
        self.expression = expression
        self.depth = depth

    def __repr__(self):
        return f'{self.__class__.__name__}({self.name}, n={self.n}, m={self.m}, order={self.order})'

    def jet(self, P):
        self._check(P)
        S = PointJet.seed(P.point(), P.order + self.depth)
        result = self.expression(S, *(f.jet(S) for f in self.inputs))
        if not isinstance(result, Jet):
            result = Jet.constant(S.space, S.order - self.depth, result)
        return P.pullback(result)
