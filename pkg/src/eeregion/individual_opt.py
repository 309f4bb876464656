"""Closed-form individual optima of the two energy efficiencies.

The transmitter corner uses the MMSE direction and an optimal transmit
power found as the unique positive root of a stationarity function; the
backscatter corner is maximal-ratio transmission on the cascaded channel
at full power. A rate-maximizing benchmark design completes the set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channel import ChannelSet, RFParams
from .errors import ConvergenceError, DomainError, NoBackscatterLink
from .linalg import norm_sq, reg_rank1_inverse_apply
from .numerics import (
    DEFAULT_ROOT_CONFIG,
    LOG2E,
    RootConfig,
    avg_backscatter_spectral,
    bisect_root,
)


class CornerLabel(str, Enum):
    PT_EE_MAX = "PT_EE_MAX"
    BD_EE_MAX = "BD_EE_MAX"
    PT_RATE_MAX = "PT_RATE_MAX"


@dataclass(frozen=True)
class CornerResult:
    """One extreme operating point of the region.

    ee_self is the efficiency the design maximizes, ee_other the one it
    implies for the other device. p_root carries the unconstrained
    stationary power for the transmitter corner (before clipping to the
    budget) so callers can see which branch of min(p_root, Pmax) applied.
    """

    p_star: float
    v_star: np.ndarray
    ee_self: float
    ee_other: float
    label: CornerLabel
    p_root: float | None = None

    @property
    def w_star(self) -> np.ndarray:
        return math.sqrt(self.p_star) * self.v_star


def _quotient_coeffs(ch: ChannelSet) -> tuple[float, float, float]:
    """Coefficients (a, b, c) of the max-SINR curve (a p + b p^2)/(1 + c p)."""
    a = norm_sq(ch.h_hat)
    c = norm_sq(ch.g_hat)
    cross = abs(np.vdot(ch.g_hat, ch.h_hat)) ** 2
    # Cauchy-Schwarz gives b >= 0; clip float noise so the curve stays concave
    b = max(a * c - cross, 0.0)
    return a, b, c


def max_sinr_closed(ch: ChannelSet, p):
    """Best achievable SINR at transmit power p, over all unit directions.

    Evaluates the rational closed form (a p + b p^2)/(1 + c p) with
    a = ||h_hat||^2, b = ||h_hat||^2 ||g_hat||^2 - |g_hat^H h_hat|^2,
    c = ||g_hat||^2; equals the quadratic form
    h_hat^H (g_hat g_hat^H + I/p)^{-1} h_hat. Accepts scalar or array p >= 0
    (p = 0 gives 0 by continuity).
    """
    a, b, c = _quotient_coeffs(ch)
    arr = np.asarray(p, dtype=np.float64)
    if np.any(arr < 0.0):
        raise DomainError("power must be >= 0")
    val = (a * arr + b * arr * arr) / (1.0 + c * arr)
    if np.isscalar(p) or arr.ndim == 0:
        return float(val)
    return val


def max_sinr_slope(ch: ChannelSet, p):
    """Derivative of max_sinr_closed: (a + 2 b p + b c p^2) / (1 + c p)^2."""
    a, b, c = _quotient_coeffs(ch)
    arr = np.asarray(p, dtype=np.float64)
    if np.any(arr < 0.0):
        raise DomainError("power must be >= 0")
    den = 1.0 + c * arr
    val = (a + 2.0 * b * arr + b * c * arr * arr) / (den * den)
    if np.isscalar(p) or arr.ndim == 0:
        return float(val)
    return val


def power_stationarity(ch: ChannelSet, rf: RFParams, p):
    """Sign function whose unique positive root is the optimal transmit power.

    h(p) = (mu p + Ps) f'(p) / (1 + f(p)) - mu ln(1 + f(p)) with f the
    max-SINR curve. Strictly decreasing on p >= 0, h(0) = ||h_hat||^2 Ps.
    """
    f = max_sinr_closed(ch, p)
    fp = max_sinr_slope(ch, p)
    arr = np.asarray(p, dtype=np.float64)
    val = (rf.mu * arr + rf.Ps) * fp / (1.0 + f) - rf.mu * np.log1p(f)
    if np.isscalar(p) or arr.ndim == 0:
        return float(val)
    return val


def ee_pt_power_curve(ch: ChannelSet, rf: RFParams, p):
    """Transmitter EE at power p with the optimal direction folded in.

    B log2(1 + f(p)) / (mu p + Ps); vectorized over p. Requires Ps > 0 or
    p > 0 everywhere.
    """
    f = max_sinr_closed(ch, p)
    arr = np.asarray(p, dtype=np.float64)
    den = rf.mu * arr + rf.Ps
    if np.any(den <= 0.0):
        raise DomainError("zero power consumption at p = 0 with Ps = 0")
    val = rf.B * np.log1p(f) * LOG2E / den
    if np.isscalar(p) or arr.ndim == 0:
        return float(val)
    return val


def mmse_direction(ch: ChannelSet, p: float) -> np.ndarray:
    """Unit direction maximizing the SINR quotient at transmit power p.

    Normalized (g_hat g_hat^H + I/p)^{-1} h_hat, applied through the
    rank-one inverse identity.
    """
    if not (p > 0.0):
        raise DomainError("power must be > 0")
    u = reg_rank1_inverse_apply(ch.g_hat, 1.0 / p, ch.h_hat)
    n = math.sqrt(norm_sq(u))
    if n == 0.0:
        raise DomainError("direct channel is zero; no useful direction")
    return u / n


def theorem1_root(
    ch: ChannelSet, rf: RFParams, cfg: RootConfig = DEFAULT_ROOT_CONFIG
) -> float:
    """Unique positive root of the power-stationarity function.

    Brackets by shrinking the lower end below the root if needed and
    doubling the upper end until the sign flips (guaranteed: the function
    starts at ||h_hat||^2 Ps > 0 and decreases to -inf), then bisects.

    Raises:
        DomainError: zero direct channel, or Ps = 0 (the efficiency
            supremum then sits at p -> 0 and no positive root exists).
    """
    a, _, _ = _quotient_coeffs(ch)
    if a <= 0.0:
        raise DomainError("direct channel is zero; no primary link")
    if not (rf.Ps > 0.0):
        raise DomainError(
            "Ps = 0 puts the transmitter EE supremum at p -> 0; no root"
        )

    lo = 1e-9
    for _ in range(40):
        if power_stationarity(ch, rf, lo) > 0.0:
            break
        lo *= 1e-3
        if lo < 5e-324:
            return 0.0
    hi = 1.0
    for _ in range(60):
        if power_stationarity(ch, rf, hi) < 0.0:
            break
        hi *= 2.0
    else:
        raise ConvergenceError("no sign change after 60 doublings", best=hi)
    return bisect_root(lambda p: power_stationarity(ch, rf, p), lo, hi, cfg)


def _mrt_on_h(ch: ChannelSet) -> np.ndarray:
    n = math.sqrt(norm_sq(ch.h_hat))
    if n == 0.0:
        raise DomainError("direct channel is zero")
    return ch.h_hat / n


def pt_ee_max(
    ch: ChannelSet, rf: RFParams, cfg: RootConfig = DEFAULT_ROOT_CONFIG
) -> CornerResult:
    """Transmitter-optimal corner: MMSE direction at the root power.

    p* = min(p_root, Pmax). With Ps = 0 the optimum is the p -> 0 limit
    (reported as p_star = 0 with the limiting efficiency B a log2(e)/mu,
    maximal-ratio direction and zero backscatter efficiency).
    """
    a, _, _ = _quotient_coeffs(ch)
    if a <= 0.0:
        raise DomainError("direct channel is zero; no primary link")
    if rf.Ps == 0.0:
        return CornerResult(
            p_star=0.0,
            v_star=_mrt_on_h(ch),
            ee_self=rf.B * a * LOG2E / rf.mu,
            ee_other=0.0,
            label=CornerLabel.PT_EE_MAX,
            p_root=0.0,
        )
    p0 = theorem1_root(ch, rf, cfg)
    p_star = min(p0, rf.Pmax)
    if p_star > 0.0:
        v_star = mmse_direction(ch, p_star)
        ee_self = rf.B * math.log2(1.0 + max_sinr_closed(ch, p_star)) / (
            rf.mu * p_star + rf.Ps
        )
        gamma_c = abs(np.vdot(ch.g_hat, v_star)) ** 2 * p_star
        ee_other = rf.B / rf.Pc * avg_backscatter_spectral(gamma_c)
    else:  # Pmax = 0: only the zero beamformer is feasible
        v_star = _mrt_on_h(ch)
        ee_self = 0.0
        ee_other = 0.0
    return CornerResult(
        p_star=p_star,
        v_star=v_star,
        ee_self=ee_self,
        ee_other=ee_other,
        label=CornerLabel.PT_EE_MAX,
        p_root=p0,
    )


def bd_ee_max(ch: ChannelSet, rf: RFParams) -> CornerResult:
    """Backscatter-optimal corner: full power, maximal-ratio on g_hat."""
    cg = norm_sq(ch.g_hat)
    if cg <= 0.0:
        raise NoBackscatterLink("g_hat = 0: the backscatter link is absent")
    v_star = ch.g_hat / math.sqrt(cg)
    ee_self = rf.B / rf.Pc * avg_backscatter_spectral(cg * rf.Pmax)
    cross = abs(np.vdot(ch.h_hat, ch.g_hat)) ** 2
    gamma_s = rf.Pmax * cross / (rf.Pmax * cg * cg + cg)
    ee_other = rf.B * math.log2(1.0 + gamma_s) / (rf.mu * rf.Pmax + rf.Ps)
    return CornerResult(
        p_star=rf.Pmax,
        v_star=v_star,
        ee_self=ee_self,
        ee_other=ee_other,
        label=CornerLabel.BD_EE_MAX,
    )


def pt_rate_max(ch: ChannelSet, rf: RFParams) -> CornerResult:
    """Benchmark design maximizing the transmitter rate, not its EE.

    The max-SINR curve is non-decreasing in p, so full power with the MMSE
    direction at full power is rate-optimal.
    """
    if rf.Pmax > 0.0:
        v_star = mmse_direction(ch, rf.Pmax)
        ee_self = rf.B * math.log2(1.0 + max_sinr_closed(ch, rf.Pmax)) / (
            rf.mu * rf.Pmax + rf.Ps
        )
        gamma_c = abs(np.vdot(ch.g_hat, v_star)) ** 2 * rf.Pmax
        ee_other = rf.B / rf.Pc * avg_backscatter_spectral(gamma_c)
    else:
        v_star = _mrt_on_h(ch)
        ee_self = 0.0
        ee_other = 0.0
    return CornerResult(
        p_star=rf.Pmax,
        v_star=v_star,
        ee_self=ee_self,
        ee_other=ee_other,
        label=CornerLabel.PT_RATE_MAX,
    )
