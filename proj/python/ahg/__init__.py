"""Exact evaluation of A-hypergeometric polynomials.

Thin convenience layer over the compiled extension module.
"""

from ._ahg import *  # noqa: F401,F403
from ._ahg import __doc__  # noqa: F401
