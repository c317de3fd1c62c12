"""Numerical laboratory for Hardy's Z function on the critical line."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
