"""Gauss-Seidel convergence analysis for general H-matrices.

Thin numpy-facing wrapper around the C++ core.  Matrices are square
complex128 arrays; reports are plain dicts mirroring the CLI's JSON.
"""

try:
    from hgs._hgs import *  # noqa: F401,F403  (installed layout)
    from hgs._hgs import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree build layout
    from _hgs import *  # noqa: F401,F403
    from _hgs import __version__  # noqa: F401
