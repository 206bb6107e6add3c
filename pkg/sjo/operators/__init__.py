"""
Operator module |br|
This module contains the covariant differential operators on Jacobi forms, from the raising and lowering operators
on :math:`\\mathbb{H} \\times \\mathbb{C}` to the determinant operators and brackets of general degree,
as well as the invariant operators built from the operator matrices :math:`Y_\\pm, X_\\pm, K` and :math:`\\Lambda`.
Every covariant operator is listed in :data:`~sjo.operators.OPERATORS`.
"""


from ._base import *
from ._kernel import *
from ._degree1 import *
from ._heisenberg import *
from ._general import *
from ._serre import *
from ._bracket import *
from ._invariant import *
