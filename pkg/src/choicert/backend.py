"""Selects the Jacobi kernel implementation at import time.

The compiled extension is preferred; the pure-Python twin is used when the
extension is unavailable or when ``CHOICERT_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

import os

if os.environ.get("CHOICERT_PURE_PYTHON", "").strip() in ("1", "true", "yes"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

jacobi_sweeps = _impl.jacobi_sweeps
KERNEL_BACKEND: str = _impl.BACKEND
