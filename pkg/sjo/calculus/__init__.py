"""
Matrix calculus module |br|
This module contains the matrix gradients :math:`\\frac{\\partial}{\\partial Z}` and :math:`\\frac{\\partial}{\\partial W}`,
an analytic family of test functions, a finite difference oracle and the derivative identities
of the invariant kernel :math:`h_1`, which the operators are built upon.
"""


from ._gradient import *
from ._oracle import *
from ._testfunction import *
from ._lemmas import *
