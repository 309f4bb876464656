"""Stable special functions and safeguarded root finding.

The ergodic rate of a Rayleigh-faded backscatter link at average SNR ``g``
is ``log2(e) * exp(1/g) * E1(1/g)`` bits/s/Hz, where ``E1`` is the
exponential integral. The two factors overflow/underflow separately once
``g`` leaves roughly [0.002, 500], so ``exp_e1_scaled`` evaluates the
product in one pass: a power series below the crossover point and a
modified-Lentz continued fraction above it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._accel import jit
from .errors import BracketError, ConvergenceError, DomainError

LOG2E = math.log2(math.e)
EULER_GAMMA = 0.5772156649015328606

_SERIES_CF_SPLIT = 1.0
_SERIES_MAX_TERMS = 64
_CF_MAX_ITERS = 400
_CF_TOL = 5e-16
# 1/gamma overflows past this point; the leading asymptote 1/z is exact to
# double precision there anyway.
_TINY_GAMMA = 1e-300


@jit
def _exp_e1_scaled_one(z: float) -> float:
    """exp(z)*E1(z) for a single z > 0."""
    if z <= _SERIES_CF_SPLIT:
        # E1(z) = -gamma - ln z + sum_{k>=1} (-1)^(k+1) z^k / (k k!)
        total = -EULER_GAMMA - math.log(z)
        term = 1.0  # z^k / k!
        sign = 1.0
        for k in range(1, _SERIES_MAX_TERMS + 1):
            term *= z / k
            contrib = sign * term / k
            total += contrib
            if abs(contrib) < 1e-17 * abs(total):
                break
            sign = -sign
        return math.exp(z) * total
    # Continued fraction e^z E1(z) = 1/(z+1-) 1/(z+3-) 4/(z+5-) ...
    # evaluated by the modified Lentz scheme; never forms e^z or E1 alone.
    b = z + 1.0
    c = 1e308
    d = 1.0 / b
    h = d
    for i in range(1, _CF_MAX_ITERS + 1):
        a = -float(i) * float(i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delt = c * d
        h *= delt
        if abs(delt - 1.0) < _CF_TOL:
            break
    return h


@jit
def _exp_e1_scaled_loop(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    for i in range(z.size):
        out[i] = _exp_e1_scaled_one(z[i])
    return out


def _exp_e1_scaled_numpy(z: np.ndarray) -> np.ndarray:
    """Vectorized fallback; element-for-element the same arithmetic as the
    scalar kernel (masked freeze replaces the early loop exits)."""
    out = np.empty_like(z)

    small = z <= _SERIES_CF_SPLIT
    if np.any(small):
        zs = z[small]
        total = -EULER_GAMMA - np.log(zs)
        term = np.ones_like(zs)
        sign = 1.0
        done = np.zeros(zs.shape, dtype=bool)
        for k in range(1, _SERIES_MAX_TERMS + 1):
            term = term * (zs / k)
            contrib = sign * term / k
            total = np.where(done, total, total + contrib)
            done |= np.abs(contrib) < 1e-17 * np.abs(total)
            if done.all():
                break
            sign = -sign
        out[small] = np.exp(zs) * total

    large = ~small
    if np.any(large):
        zl = z[large]
        b = zl + 1.0
        c = np.full_like(zl, 1e308)
        d = 1.0 / b
        h = d.copy()
        done = np.zeros(zl.shape, dtype=bool)
        for i in range(1, _CF_MAX_ITERS + 1):
            a = -float(i) * float(i)
            b = b + 2.0
            d = 1.0 / (a * d + b)
            c = b + a / c
            delt = c * d
            h = np.where(done, h, h * delt)
            done |= np.abs(delt - 1.0) < _CF_TOL
            if done.all():
                break
        out[large] = h

    return out


def _dispatch_exp_e1(flat: np.ndarray) -> np.ndarray:
    from ._accel import NUMBA_ENABLED

    if NUMBA_ENABLED:
        return _exp_e1_scaled_loop(flat)
    return _exp_e1_scaled_numpy(flat)


def exp_e1_scaled(z):
    """exp(z) * E1(z) for z > 0; scalar or elementwise over an array.

    Positive, strictly decreasing, bracketed by (1/(z+1), 1/z). Relative
    error is below 1e-12 across z in [1e-12, 1e12].

    Raises:
        DomainError: if any element is <= 0 or non-finite.
    """
    arr = np.asarray(z, dtype=np.float64)
    if arr.size == 0:
        return arr.copy()
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("exp_e1_scaled requires finite z > 0")
    out = _dispatch_exp_e1(np.ascontiguousarray(arr.ravel())).reshape(arr.shape)
    if np.isscalar(z) or arr.ndim == 0:
        return float(out)
    return out


def avg_backscatter_spectral(gamma):
    """Average spectral efficiency of the backscatter link, bits/s/Hz.

    Equals ``log2(e) * exp_e1_scaled(1/gamma)`` for average SNR gamma > 0
    and 0 at gamma = 0 (continuous limit). Strictly increasing in gamma.
    Accepts scalars or arrays of nonnegative values.
    """
    arr = np.asarray(gamma, dtype=np.float64)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise DomainError("average SNR must be finite and >= 0")
    out = np.zeros_like(arr)
    pos = arr > 0.0
    if np.any(pos):
        g = arr[pos]
        res = np.empty_like(g)
        tiny = g < _TINY_GAMMA
        # below _TINY_GAMMA the 1/gamma argument overflows; 1/z asymptote
        res[tiny] = g[tiny]
        big = ~tiny
        if np.any(big):
            res[big] = exp_e1_scaled(1.0 / g[big])
        out[pos] = LOG2E * res
    if np.isscalar(gamma) or arr.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class RootConfig:
    """Tolerances for bracketed root finding.

    abs_tol is in the units of the argument; rel_tol is dimensionless.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_iters: int = 200

    def __post_init__(self):
        if not (self.abs_tol > 0.0):
            raise DomainError("abs_tol must be > 0")
        if not (self.rel_tol > 0.0):
            raise DomainError("rel_tol must be > 0")
        if self.max_iters < 1:
            raise DomainError("max_iters must be >= 1")


DEFAULT_ROOT_CONFIG = RootConfig()


def bisect_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: RootConfig = DEFAULT_ROOT_CONFIG,
) -> float:
    """Bisection on a bracketed sign change; invariant to swapping lo/hi.

    Terminates once the bracket width falls below
    max(abs_tol, rel_tol * |midpoint|) and returns the midpoint.

    Raises:
        BracketError: f(lo) and f(hi) have the same sign.
        ConvergenceError: max_iters exceeded (carries the best midpoint).
    """
    a = float(lo)
    b = float(hi)
    if a == b:
        raise BracketError("empty bracket")
    fa = f(a)
    fb = f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise BracketError(f"no sign change on bracket [{lo}, {hi}]")
    mid = 0.5 * (a + b)
    for _ in range(cfg.max_iters):
        mid = 0.5 * (a + b)
        if abs(b - a) <= max(cfg.abs_tol, cfg.rel_tol * abs(mid)):
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a = mid
            fa = fm
        else:
            b = mid
    raise ConvergenceError(
        f"bisection did not converge in {cfg.max_iters} iterations", best=mid
    )
