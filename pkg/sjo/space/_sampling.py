#
#   Reproducible random points and group elements
#   Copyright EAVISE
#

import logging
import numpy as np

from ._group import identity_element, translation, inversion, heisenberg, compose
from ._point import SiegelJacobiPoint

__all__ = ['random_point', 'box_point', 'random_group_element', 'random_heisenberg', 'rng']
log = logging.getLogger(__name__)

MAX_WORD = 6
MAX_ENTRY = 3


def rng(seed):
    """ Numpy generator for an integer seed or a sequence of integers. """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _symmetric(gen, n, low, high, integer=False):
    if integer:
        S = gen.integers(low, high + 1, size=(n, n))
    else:
        S = gen.uniform(low, high, size=(n, n))
    return np.triu(S) + np.triu(S, 1).T


def random_point(n, m, seed):
    """ Random point with :math:`Y = Q^tQ + \\epsilon I`.

    Args:
        n, m (int): Dimensions
        seed (int, sequence or numpy.random.Generator): Seed
    """
    gen = rng(seed)
    Q = gen.uniform(-1, 1, size=(n, n))
    Y = Q.T @ Q + 0.5 * np.eye(n)
    X = _symmetric(gen, n, -1, 1)
    W = gen.uniform(-0.5, 0.5, size=(m, n)) + 1j * gen.uniform(-0.5, 0.5, size=(m, n))
    return SiegelJacobiPoint(X + 1j * Y, W)


def box_point(n, m, seed, eig=(0.7, 2.5), re=1.0, w=0.5):
    """ Random point in a compact box: eigenvalues of Y in ``eig``, :math:`|Re Z_{ij}| \\leq re` and real and imaginary parts of W bounded by ``w``. """
    gen = rng(seed)
    O, _ = np.linalg.qr(gen.normal(size=(n, n)))
    Y = O @ np.diag(gen.uniform(*eig, size=n)) @ O.T
    Y = (Y + Y.T) / 2
    X = _symmetric(gen, n, -re, re)
    W = gen.uniform(-w, w, size=(m, n)) + 1j * gen.uniform(-w, w, size=(m, n))
    return SiegelJacobiPoint(X + 1j * Y, W)


def random_heisenberg(n, m, seed, bound=1):
    """ Random integral Heisenberg element with entries of :math:`\\lambda, \\mu` in ``[-bound, bound]``. """
    gen = rng(seed)
    lam = gen.integers(-bound, bound + 1, size=(m, n)).astype(float)
    mu = gen.integers(-bound, bound + 1, size=(m, n)).astype(float)
    K = _symmetric(gen, m, -bound, bound, integer=True).astype(float)
    return heisenberg(lam, mu, K - mu @ lam.T)


def random_group_element(n, m, seed, scale=3):
    """ Random integral element of the Jacobi group.

    The symplectic part is a word alternating block translations (symmetric integer S with entries in [-3, 3])
    and the inversion, of length ``min(scale, 6)``. The result is multiplied by a random integral Heisenberg element.

    Args:
        n, m (int): Dimensions
        seed (int, sequence or numpy.random.Generator): Seed
        scale (int, optional): Word length; Default **3**

    Note:
        A scale of 0 returns the identity and words of length 2 or more always have a nonzero C block.
    """
    if scale <= 0:
        return identity_element(n, m)

    gen = rng(seed)
    g = identity_element(n, m)
    for t in range(min(scale, MAX_WORD)):
        if t % 2 == 0:
            g = compose(g, translation(_symmetric(gen, n, -MAX_ENTRY, MAX_ENTRY, integer=True), m))
        else:
            g = compose(g, inversion(n, m))
    return compose(g, random_heisenberg(n, m, gen))
