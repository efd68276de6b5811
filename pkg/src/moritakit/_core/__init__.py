"""Elimination kernel, compiled when available.

Set ``MORITAKIT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _pycore

BACKEND = "python"
rref_rows = _pycore.rref_rows

if os.environ.get("MORITAKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ccore  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        BACKEND = "cython"
        rref_rows = _ccore.rref_rows

__all__ = ["BACKEND", "rref_rows"]
