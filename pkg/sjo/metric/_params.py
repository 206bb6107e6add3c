#
#   Metric parameters
#   Copyright EAVISE
#

from dataclasses import dataclass

from ..errors import ConfigError

__all__ = ['MetricParams']


@dataclass(frozen=True)
class MetricParams:
    """ The two positive constants A and B of the invariant metric

    .. math::
        ds^2 = A \\, Tr(Y^{-1}dZ\\,Y^{-1}d\\overline{Z}) + B \\, Tr(Y^{-1}d\\Omega^t d\\overline{\\Omega}), \\qquad d\\Omega = dW - VY^{-1}dZ
    """
    A: float = 1.0
    B: float = 1.0

    def __post_init__(self):
        if not (self.A > 0 and self.B > 0):
            raise ConfigError(f'Metric parameters should be positive [A={self.A}, B={self.B}]')
