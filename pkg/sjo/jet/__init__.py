"""
Truncated multivariate Taylor series |br|
This module contains the jet arithmetic that every differential computation of sjo is built upon.
A :class:`~sjo.jet.Jet` stores the Taylor coefficients of a (matrix of) smooth function(s) up to a fixed total order,
with respect to a set of independent complexified coordinates.
"""


from ._space import *
from ._jet import *
from ._functional import *
