"""Dense complex vector helpers for the beamforming algebra.

Vectors are 1-D ``numpy`` arrays of ``complex128``; the one matrix inverse
the optimizer needs, ``(g g^H + c I)^{-1}``, is applied through its
rank-one update identity rather than formed densely.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError


def as_cvec(x, name: str = "vector") -> np.ndarray:
    """Coerce to a finite 1-D complex128 array."""
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.size < 1:
        raise DomainError(f"{name} must be a 1-D vector of length >= 1")
    if not np.all(np.isfinite(v.view(np.float64))):
        raise DomainError(f"{name} must be finite")
    return v


def inner(a, b) -> complex:
    """Hermitian inner product a^H b (conjugate-linear in the first slot)."""
    a = as_cvec(a, "a")
    b = as_cvec(b, "b")
    if a.shape != b.shape:
        raise DomainError(f"length mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def norm_sq(a) -> float:
    a = as_cvec(a, "a")
    return float(np.real(np.vdot(a, a)))


def reg_rank1_inverse_apply(g, c: float, x) -> np.ndarray:
    """Apply (g g^H + c I)^{-1} to x via the rank-one update identity.

    (g g^H + c I)^{-1} x = (x - g (g^H x) / (c + ||g||^2)) / c

    Args:
        g: rank-one factor.
        c: positive ridge.
        x: right-hand side, same length as g.

    Returns:
        y with (g g^H + c I) y = x to relative residual <= 1e-12.
    """
    g = as_cvec(g, "g")
    x = as_cvec(x, "x")
    if g.shape != x.shape:
        raise DomainError(f"length mismatch: {g.shape} vs {x.shape}")
    if not (c > 0.0) or not np.isfinite(c):
        raise DomainError("ridge c must be finite and > 0")
    gx = np.vdot(g, x)
    return (x - g * (gx / (c + norm_sq(g)))) / c
