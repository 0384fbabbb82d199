"""Distance magic labelings of quasi wreath graphs (C++ core)."""

from ._dmlab import *  # noqa: F401,F403
from ._dmlab import ParseError, PreconditionError, RangeError  # noqa: F401

__version__ = "0.1.0"
