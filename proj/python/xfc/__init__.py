"""Stable set formulation complexity toolkit.

Gadget graph constructions, slack matrices, UDISJ embeddings, the
factorization-theorem transforms, nonnegative-rank bounds, and seeded
random-graph experiments. All exact values cross the boundary as
fractions.Fraction.
"""

from ._xfc import *  # noqa: F401,F403
from ._xfc import __version__  # noqa: F401
