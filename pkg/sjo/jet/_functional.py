#
#   Functions that accept both numpy arrays and jets
#   Copyright EAVISE
#

import numpy as np

from ._jet import Jet

__all__ = ['det', 'inv', 'trace', 'transpose', 'exp', 'log', 'power', 'value', 'is_jet']


def is_jet(x):
    return isinstance(x, Jet)


def det(x):
    return x.det() if isinstance(x, Jet) else np.linalg.det(x)


def inv(x):
    return x.inv() if isinstance(x, Jet) else np.linalg.inv(x)


def trace(x):
    return x.trace() if isinstance(x, Jet) else np.trace(x, axis1=-2, axis2=-1)


def transpose(x):
    return x.T if isinstance(x, Jet) else np.swapaxes(x, -1, -2)


def exp(x):
    return x.exp() if isinstance(x, Jet) else np.exp(x)


def log(x):
    return x.log() if isinstance(x, Jet) else np.log(x)


def power(x, exponent):
    if isinstance(x, Jet):
        return x.power(exponent)
    return np.asarray(x, dtype=complex) ** exponent


def value(x):
    """ Numeric value of an array or the constant term of a jet. """
    return x.value if isinstance(x, Jet) else np.asarray(x)
