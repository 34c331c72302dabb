"""Kernel selection: compiled Cython module when available, else pure Python.

Set the environment variable ``DESCENTS_PURE_PYTHON=1`` to force the pure
fallback (useful for benchmarking and for debugging the kernels).
"""

from __future__ import annotations

import os

if os.environ.get("DESCENTS_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

convolve = _impl.convolve
enumerate_tables = _impl.enumerate_tables
reading_word_counts = _impl.reading_word_counts
sum_reading_multinomials = _impl.sum_reading_multinomials


def backend_name() -> str:
    """Which kernel implementation is active: ``"cython"`` or ``"pure"``."""
    return _impl.BACKEND
