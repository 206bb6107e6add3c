#
#   Points of the Siegel-Jacobi space
#   Copyright EAVISE
#

import logging
import numpy as np

from ..errors import InvalidPoint
from ._complex import parse_complex

__all__ = ['SiegelJacobiPoint', 'TAU_PD', 'TAU_SYM']
log = logging.getLogger(__name__)

TAU_PD = 1e-10      # Smallest eigenvalue of Y
TAU_SYM = 1e-12     # Largest asymmetry of Z that gets symmetrized


def _matrix(value, name):
    value = np.array(value, dtype=complex)
    if value.ndim == 0:
        value = value.reshape(1, 1)
    if value.ndim != 2:
        raise InvalidPoint(f'{name} should be a matrix [shape {value.shape}]')
    return value


def _readonly(array):
    array.setflags(write=False)
    return array


class SiegelJacobiPoint:
    """ Point :math:`(Z, W)` of the Siegel-Jacobi space :math:`\\mathbb{H}_{n,m}`.

    Args:
        Z (array-like): Complex symmetric n x n matrix with positive definite imaginary part
        W (array-like): Complex m x n matrix
        tol_pd (float, optional): Smallest allowed eigenvalue of Y; Default **1e-10**

    Attributes:
        self.Y: Imaginary part of Z
        self.V: Imaginary part of W
        self.R: Inverse of Y

    Note:
        Nearly symmetric Z matrices (asymmetry below 1e-12) are symmetrized, otherwise an :class:`~sjo.errors.InvalidPoint` is raised.
        The object is immutable: the stored arrays are flagged read-only.
    """
    def __init__(self, Z, W, tol_pd=TAU_PD):
        Z = _matrix(Z, 'Z')
        W = _matrix(W, 'W')
        n = Z.shape[0]
        if Z.shape != (n, n):
            raise InvalidPoint(f'Z should be square [{Z.shape}]')
        if W.shape[1] != n or W.shape[0] < 1:
            raise InvalidPoint(f'W should be of shape (m, {n}) [{W.shape}]')
        if not (np.all(np.isfinite(Z)) and np.all(np.isfinite(W))):
            raise InvalidPoint('Z and W should be finite')

        asym = np.max(np.abs(Z - Z.T))
        if asym > TAU_SYM * max(1, np.max(np.abs(Z))):
            raise InvalidPoint(f'Z is not symmetric [asymmetry {asym:.3e}]')
        Z = (Z + Z.T) / 2

        Y = Z.imag.copy()
        eig = np.linalg.eigvalsh(Y)
        if eig[0] <= tol_pd:
            raise InvalidPoint(f'Imaginary part of Z is not positive definite [smallest eigenvalue {eig[0]:.3e}]')

        self.Z = _readonly(Z)
        self.W = _readonly(W)
        self.Y = _readonly(Y)
        self.V = _readonly(W.imag.copy())
        self.R = _readonly(np.linalg.inv(Y))

    @classmethod
    def from_scalars(cls, z, w):
        """ Point of :math:`\\mathbb{H}_{1,1}`. """
        return cls([[z]], [[w]])

    @property
    def n(self):
        return self.Z.shape[0]

    @property
    def m(self):
        return self.W.shape[0]

    @property
    def z(self):
        """ Scalar z coordinate of a degree 1 point. """
        return complex(self.Z[0, 0])

    @property
    def w(self):
        return complex(self.W[0, 0])

    def __repr__(self):
        return f'{self.__class__.__name__}(n={self.n}, m={self.m}, Z={self.Z.tolist()}, W={self.W.tolist()})'

    def __eq__(self, other):
        if not isinstance(other, SiegelJacobiPoint):
            return NotImplemented
        return np.array_equal(self.Z, other.Z) and np.array_equal(self.W, other.W)

    def __hash__(self):
        return hash((self.Z.tobytes(), self.W.tobytes()))

    def distance(self, other):
        """ Max-norm distance between the coordinates of two points. """
        return max(np.max(np.abs(self.Z - other.Z)), np.max(np.abs(self.W - other.W)))

    def to_json(self):
        return {
            'n': self.n,
            'm': self.m,
            'Z_re': self.Z.real.tolist(),
            'Z_im': self.Z.imag.tolist(),
            'W_re': self.W.real.tolist(),
            'W_im': self.W.imag.tolist(),
        }

    @classmethod
    def from_json(cls, data):
        """ Create a point from its json representation.

        Args:
            data (dict): Either ``{"n", "m", "Z_re", "Z_im", "W_re", "W_im"}`` or, for degree 1, ``{"z", "w"}`` with complex numbers or "a+bi" strings
        """
        try:
            if 'z' in data:
                return cls.from_scalars(parse_complex(data['z']), parse_complex(data.get('w', 0)))

            Z = np.array(data['Z_re'], dtype=float) + 1j * np.array(data['Z_im'], dtype=float)
            W = np.array(data['W_re'], dtype=float) + 1j * np.array(data['W_im'], dtype=float)
        except KeyError as err:
            raise InvalidPoint(f'Missing field {err} in point data') from None
        except (TypeError, ValueError) as err:
            raise InvalidPoint(f'Malformed point data: {err}') from None

        point = cls(Z, W)
        if 'n' in data and data['n'] != point.n or 'm' in data and data['m'] != point.m:
            raise InvalidPoint(f'Declared (n, m)=({data.get("n")}, {data.get("m")}) does not match matrices ({point.n}, {point.m})')
        return point
