"""Exact bounds on graded Betti numbers and on empty simplices of simplicial polytopes."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
