"""Crowd simulation with fast-forward jumps, OCEAN personalities and fog of war."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
