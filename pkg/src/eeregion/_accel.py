"""Numba acceleration switch for the hot numeric kernels.

The two inner loops that dominate runtime (the scaled exponential-integral
evaluation and the barrier-Newton subproblem solver) are written so they run
either JIT-compiled through numba or as plain Python/numpy. Selection:

* ``EEREGION_NUMBA=0`` (or ``false``/``off``) forces the pure-numpy path.
* ``EEREGION_NUMBA=1`` requires numba and raises if it cannot be imported.
* unset / ``auto``: use numba when importable, fall back silently otherwise.

``benchmarks/bench_kernels.py`` times both paths side by side.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("EEREGION_NUMBA", "auto").strip().lower()

if _FLAG in ("0", "false", "off", "no"):
    NUMBA_ENABLED = False
    _numba_import_error = None
else:
    try:
        import numba  # noqa: F401

        NUMBA_ENABLED = True
        _numba_import_error = None
    except ImportError as exc:  # pragma: no cover - depends on environment
        if _FLAG in ("1", "true", "on", "yes"):
            raise ImportError(
                "EEREGION_NUMBA=1 but numba is not importable"
            ) from exc
        NUMBA_ENABLED = False
        _numba_import_error = exc


def jit(func):
    """Compile ``func`` with numba when enabled, otherwise return it as-is.

    The decorated functions are written in nopython-compatible numpy, so the
    undecorated object is the fallback path.
    """
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func


def numba_enabled() -> bool:
    return NUMBA_ENABLED
