"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PENTABOUND_PURE=1 to force the pure backend.
"""

import os

if os.environ.get("PENTABOUND_PURE"):
    from pentabound._kernels.pure import canon_search, count_c5

    BACKEND = "pure"
else:
    try:
        from pentabound._kernels._fast import canon_search, count_c5

        BACKEND = "compiled"
    except ImportError:
        from pentabound._kernels.pure import canon_search, count_c5

        BACKEND = "pure"

__all__ = ["canon_search", "count_c5", "BACKEND"]
