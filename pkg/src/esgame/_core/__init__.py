"""Kernel lane selection: compiled extension when importable, pure
Python otherwise.  ESGAME_PURE=1 forces the pure lane."""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("ESGAME_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND: str = "compiled" if _impl is not _pure else "pure"

find_convex_gon = _impl.find_convex_gon
find_empty_convex_gon = _impl.find_empty_convex_gon
losing_addition = _impl.losing_addition

from .tables import signs2_for_point, signs3_table  # noqa: E402

__all__ = [
    "BACKEND",
    "find_convex_gon",
    "find_empty_convex_gon",
    "losing_addition",
    "signs3_table",
    "signs2_for_point",
]
