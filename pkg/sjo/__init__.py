#
#   SJO : Differential operators on the Siegel-Jacobi space
#   Copyright EAVISE
#

__all__ = ['jet', 'space', 'calculus', 'metric', 'qseries', 'operators', 'verify', 'errors']


from .version import __version__
from .log import *

from . import errors
from . import jet
from . import space
from . import calculus
from . import metric
from . import qseries
from . import operators
from . import verify
