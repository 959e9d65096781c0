"""Backend selection: compiled kernels when available, pure Python otherwise.

Set DILOGKIT_BACKEND=python or DILOGKIT_BACKEND=compiled to force a choice;
forcing "compiled" raises if the extension was not built.
"""
from __future__ import annotations

import os

from . import _kernels_py

_requested = os.environ.get("DILOGKIT_BACKEND", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"
elif _requested in ("python", "pure"):
    kernels = _kernels_py
    BACKEND = "python"
elif _requested == "compiled":
    from . import _kernels as kernels  # type: ignore[attr-defined]

    BACKEND = "compiled"
else:
    raise ValueError(
        f"DILOGKIT_BACKEND must be 'auto', 'python' or 'compiled', got {_requested!r}"
    )


def backend_name() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND
