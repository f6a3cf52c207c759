"""nucalc: a workbench for a call-by-value language with fresh name generation.

Two semantics (a name-supply interpreter and a world-indexed one), the
category of finite sets and injections, spans of worlds, and checkable
certificates of program equivalence.
"""
from .errors import NuError

__version__ = "0.1.0"
__all__ = ["NuError", "__version__"]
