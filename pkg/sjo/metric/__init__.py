"""
Invariant metric module |br|
This module contains the invariant Kähler metric of :math:`\\mathbb{H}_{n,m}` in block matrix form,
its closed form inverse, and the Levi-Civita connection computed both from the Christoffel formula and in closed form.
"""


from ..space._indexsets import IndexSets, index_sets, Coordinate
from ._params import *
from ._blocks import *
from ._connection import *
from ._invariance import *
