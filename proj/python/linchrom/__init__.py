"""Linear/centred colouring toolkit: exact small-graph solvers and the
non-linearity certificate pipeline for random graphs."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
