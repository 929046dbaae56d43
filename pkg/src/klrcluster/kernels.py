"""Select the compiled shuffle kernels when available.

Set ``KLRCLUSTER_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
max_shuffle = _pykernels.max_shuffle
shuffle_terms = _pykernels.shuffle_terms

if not os.environ.get("KLRCLUSTER_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        max_shuffle = _ckernels.max_shuffle
        shuffle_terms = _ckernels.shuffle_terms

__all__ = ["BACKEND", "max_shuffle", "shuffle_terms"]
