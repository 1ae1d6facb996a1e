"""Kernel backend selection.

The hot kernels (canonical labelling, memoized game search, augmentation)
exist twice: a Cython extension and a pure-Python fallback with identical
semantics.  The extension is used when it is importable; set
``LINKATLAS_BACKEND=pure`` or ``=compiled`` to force one.
"""

from __future__ import annotations

import os

_forced = os.environ.get("LINKATLAS_BACKEND", "auto").strip().lower()

if _forced in ("auto", "", "compiled", "c"):
    try:
        from . import _ckernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        if _forced in ("compiled", "c"):
            raise ImportError(
                "LINKATLAS_BACKEND=compiled but the extension is not built; "
                "reinstall with a C compiler available"
            ) from None
        from . import _pykernel as kernel  # type: ignore[no-redef]
elif _forced in ("pure", "python", "py"):
    from . import _pykernel as kernel  # type: ignore[no-redef]
else:
    raise ValueError(f"unknown LINKATLAS_BACKEND value: {_forced!r}")

BACKEND: str = kernel.BACKEND_NAME
CAP: int = kernel.CAP


def active_backend() -> str:
    """Name of the kernel in use: ``compiled`` or ``pure``."""
    return BACKEND
