"""Normalized solutions of x^2 + D y^2 = z^2 through the class group C(-4D)."""

from ._pellgroup import *  # noqa: F401,F403
from ._pellgroup import __doc__  # noqa: F401

__version__ = "0.1.0"
