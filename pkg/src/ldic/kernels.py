"""Kernel selection.

The compiled extension is used when importable; setting ``LDIC_PURE_PYTHON=1``
forces the pure-Python implementation.
"""

import os

from ldic import _pykernels

BACKEND = "python"

if os.environ.get("LDIC_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from ldic import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

polygon_vertices = _impl.polygon_vertices
tight_counts = _impl.tight_counts

__all__ = ["BACKEND", "polygon_vertices", "tight_counts"]
