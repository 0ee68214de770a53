"""Fidelity-based entanglement measures and monogamy bound verification."""

from entmono._core import *  # noqa: F401,F403
from entmono._core import __version__  # noqa: F401
