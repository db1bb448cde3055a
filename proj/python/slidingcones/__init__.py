"""Sliding minimal cone toolkit: thin wrapper over the C++ core."""

from _slidingcones import *  # noqa: F401,F403
from _slidingcones import __version__  # noqa: F401
