"""Kernel selection: compiled core when available, pure Python otherwise.

Set ``DISSOC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

IMPLEMENTATION = "python"
dp_tables = _pykernels.dp_tables
mds_search = _pykernels.mds_search

if not os.environ.get("DISSOC_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        dp_tables = _ckernels.dp_tables
        mds_search = _ckernels.mds_search
        IMPLEMENTATION = "cython"

FREE, FORCE_IN, FORCE_OUT = _pykernels.FREE, _pykernels.FORCE_IN, _pykernels.FORCE_OUT

__all__ = ["dp_tables", "mds_search", "IMPLEMENTATION", "FREE", "FORCE_IN", "FORCE_OUT"]
