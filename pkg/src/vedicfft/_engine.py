"""Evaluation backend selection, done once at import.

The compiled Cython kernel is preferred when the extension was built;
otherwise the pure-Python twin takes over. ``VEDICFFT_BACKEND`` forces a
choice (``compiled``, ``python``, or ``auto``). Both kernels stay reachable
through ``KERNELS`` so tests and benchmarks can compare them directly.
"""

from __future__ import annotations

import os

from . import _simcore_py

KERNELS = {"python": _simcore_py.eval_gates}

try:
    from . import _simcore

    KERNELS["compiled"] = _simcore.eval_gates
except ImportError:
    pass


def _select() -> str:
    forced = os.environ.get("VEDICFFT_BACKEND", "auto").strip().lower() or "auto"
    if forced == "auto":
        return "compiled" if "compiled" in KERNELS else "python"
    if forced not in ("python", "compiled"):
        raise ImportError(f"VEDICFFT_BACKEND must be auto, python or compiled, not {forced!r}")
    if forced not in KERNELS:
        raise ImportError("VEDICFFT_BACKEND=compiled but the extension is not built")
    return forced


BACKEND = _select()
eval_gates = KERNELS[BACKEND]
