"""Kernel backends for the distance and cover-search hot loops.

The compiled extension is preferred when it imported cleanly; the pure-Python
module is the fallback and the behavioural reference.  Set FUNCTIDIM_PURE=1
to force the fallback (used by the benchmark and parity tests).
"""

import os

from . import pure

SOLVED = pure.SOLVED
BUDGET_EXHAUSTED = pure.BUDGET_EXHAUSTED

if os.environ.get("FUNCTIDIM_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = pure

BACKEND = "pure" if _impl is pure else "cython"

bfs_all_pairs = _impl.bfs_all_pairs
min_cover_search = _impl.min_cover_search


def get_backend(name):
    """Return a specific backend module by name ('pure' or 'cython')."""
    if name == "pure":
        return pure
    if name == "cython":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")
