"""Bivariate means and their sharp power/Lehmer mean bounds."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
