"""Kernel selection: compiled Cython core when built, pure Python otherwise.

Set ``WHAPAR_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("WHAPAR_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import SparseEchelon, WordRewriter, rref_dense
else:
    try:
        from ._kernels import SparseEchelon, WordRewriter, rref_dense

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import SparseEchelon, WordRewriter, rref_dense

__all__ = ["BACKEND", "SparseEchelon", "WordRewriter", "rref_dense"]
