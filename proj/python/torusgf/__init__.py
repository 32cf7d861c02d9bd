"""Critical points of the torus Green's function, curvature-1 conic metrics,
and entire-function growth analysis (maximal term, central index, monomial
approximation, escaping orbits)."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
