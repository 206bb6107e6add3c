"""
Verification module |br|
This module contains the harness that measures covariance, invariance and connection residuals,
the registry of claims that are checked by the suite and the versioned tolerances they are judged against.
"""


from ._tolerance import *
from ._report import *
from ._parameter import *
from ._harness import *
from ._claims import *
from ._suite import *
