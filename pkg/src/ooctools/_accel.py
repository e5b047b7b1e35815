"""Select the compiled kernels when available, else the pure-Python ones.

Set ``OOCTOOLS_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if not os.environ.get("OOCTOOLS_PURE"):
    try:
        from . import _kernels as compiled
    except ImportError:
        compiled = None

kernels = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

__all__ = ["BACKEND", "compiled", "kernels", "pure"]
