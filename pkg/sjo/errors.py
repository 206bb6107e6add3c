#
#   Exception hierarchy
#   Copyright EAVISE
#

__all__ = [
    'SJOError', 'InvalidPoint', 'InvalidGroupElement', 'InvalidWeightIndex',
    'SingularFactor', 'OrderTooLow', 'StepUnderflow', 'SingularIndex', 'IndexOutOfRange',
    'BadRowSelection', 'DimensionMismatch', 'PoleProximity', 'TruncationTooSmall',
    'NotThetaDecomposable', 'ConfigError',
]


class SJOError(Exception):
    """ Base class of every error raised by sjo. """


# Rejected input
class InvalidPoint(SJOError, ValueError):
    """ Input does not describe a point of the Siegel-Jacobi space. """


class InvalidGroupElement(SJOError, ValueError):
    """ Input is not an element of the Jacobi group. """


class InvalidWeightIndex(SJOError, ValueError):
    """ Weight is not integral or index matrix is not half-integral symmetric. """


class IndexOutOfRange(SJOError, IndexError):
    """ Row or coordinate index outside of its range. """


class BadRowSelection(SJOError, ValueError):
    """ Row subset for a determinant operator is missing, of the wrong size or repeated. """


class DimensionMismatch(SJOError, ValueError):
    """ Operator is not defined for the requested (n, m). """


class ConfigError(SJOError, ValueError):
    """ Invalid command line arguments or suite configuration. """


# Numerical
class SingularFactor(SJOError, ArithmeticError):
    """ :math:`|\\det(CZ+D)|` below the singularity threshold; the caller should resample. """


class OrderTooLow(SJOError, ArithmeticError):
    """ A map does not expose partial derivatives of the required order. """


class StepUnderflow(SJOError, ArithmeticError):
    """ Finite difference step below the smallest usable value. """


class SingularIndex(SJOError, ArithmeticError):
    """ Index matrix not invertible where an operator requires it. """


class PoleProximity(SJOError, ArithmeticError):
    """ Evaluation point too close to the divisor :math:`w \\in \\mathbb{Z}z+\\mathbb{Z}`. """


class TruncationTooSmall(SJOError, ArithmeticError):
    """ Truncated series or lattice sum does not reach the requested accuracy. """


class NotThetaDecomposable(SJOError, ArithmeticError):
    """ Coefficients do not depend on :math:`(4n-r^2, r \\bmod 2)` only. """
