"""
Siegel-Jacobi space module |br|
This module contains the space :math:`\\mathbb{H}_{n,m}`, the Jacobi group acting on it,
factors of automorphy and the slash action, as well as the :class:`~sjo.space.SmoothMap` contract
that every function and operator of sjo implements.
"""


from ._complex import *
from ._indexsets import *
from ._point import *
from ._pointjet import *
from ._group import *
from ._weight import *
from ._action import *
from ._smoothmap import *
from ._sampling import *
