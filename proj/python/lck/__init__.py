"""Exact-arithmetic toolkit for locally conformally Kahler, Vaisman and Sasaki
structures on Lie algebras.

The heavy lifting happens in the C++ extension ``_lck``; this package
re-exports its surface. Rationals cross the boundary as strings ("3", "-1/2"),
algebras and structures as JSON documents in the CLI's file format.
"""

try:
    from ._lck import *  # noqa: F401,F403  (installed layout)
    from ._lck import __version__  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _lck import *  # noqa: F401,F403
    from _lck import __version__  # noqa: F401
