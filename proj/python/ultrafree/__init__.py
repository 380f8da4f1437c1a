"""Exact invariants of graphs, set systems and convexity spaces.

Rational results are returned as ``fractions.Fraction``; rational arguments accept a
Fraction, an int or a ``"P/Q"`` string.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
