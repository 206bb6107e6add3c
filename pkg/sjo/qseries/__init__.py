"""
q-expansion module |br|
This module contains exact truncated q-expansions and Fourier-Jacobi expansions, the eta and theta functions,
the weak Jacobi forms of index one, classical and twisted Eisenstein series,
the heat operator and theta decomposition on coefficients, and adapters that turn all of these into SmoothMaps.
"""


from ._series import *
from ._corpus import *
from ._eisenstein import *
from ._correspondence import *
from ._maps import *
from ._golden import *
