"""Energy efficiencies of both devices for an arbitrary beamformer.

All formulas use the normalized channels (h_hat, g_hat); the raw-channel
forms with explicit reflection coefficient, scalar link gain and noise
power exist only as oracles in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelSet, RFParams
from .errors import DomainError
from .linalg import as_cvec, norm_sq
from .numerics import avg_backscatter_spectral


@dataclass(frozen=True)
class Beamformer:
    """Transmit beamformer w, entries in sqrt(Watts); power p = ||w||^2."""

    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "w", as_cvec(self.w, "w"))

    @classmethod
    def from_power_direction(cls, p: float, v) -> "Beamformer":
        """Build w = sqrt(p) * v from a power and a unit direction."""
        v = as_cvec(v, "v")
        if p < 0.0:
            raise DomainError("power must be >= 0")
        nv = math.sqrt(norm_sq(v))
        if abs(nv - 1.0) > 1e-9:
            raise DomainError(f"direction norm {nv} is not 1")
        return cls(w=math.sqrt(p) * v)

    @property
    def p(self) -> float:
        return norm_sq(self.w)

    @property
    def v(self) -> np.ndarray:
        n = math.sqrt(self.p)
        if n == 0.0:
            raise DomainError("zero beamformer has no direction")
        return self.w / n


@dataclass(frozen=True)
class EEPair:
    """Achieved energy efficiencies in bits/Joule."""

    ee_pt: float
    ee_bd: float


def _as_w(w) -> np.ndarray:
    if isinstance(w, Beamformer):
        return w.w
    return as_cvec(w, "w")


def sinr_pt(w, ch: ChannelSet) -> float:
    """Decoding SINR of the direct link: |h_hat^H w|^2 / (|g_hat^H w|^2 + 1)."""
    w = _as_w(w)
    if w.shape != ch.h_hat.shape:
        raise DomainError("beamformer/channel dimension mismatch")
    num = abs(np.vdot(ch.h_hat, w)) ** 2
    den = abs(np.vdot(ch.g_hat, w)) ** 2 + 1.0
    return float(num / den)


def ee_pt(w, ch: ChannelSet, rf: RFParams) -> float:
    """Transmitter energy efficiency B log2(1+sinr) / (mu ||w||^2 + Ps)."""
    w = _as_w(w)
    p = norm_sq(w)
    den = rf.mu * p + rf.Ps
    if den <= 0.0:
        raise DomainError("zero power consumption: Ps = 0 and w = 0")
    return rf.B * math.log2(1.0 + sinr_pt(w, ch)) / den


def backscatter_gain(w, ch: ChannelSet) -> float:
    """Average backscatter SNR |g_hat^H w|^2."""
    w = _as_w(w)
    if w.shape != ch.g_hat.shape:
        raise DomainError("beamformer/channel dimension mismatch")
    return float(abs(np.vdot(ch.g_hat, w)) ** 2)


def ee_bd(w, ch: ChannelSet, rf: RFParams) -> float:
    """Backscatter-device energy efficiency (B/Pc) * spectral(|g_hat^H w|^2)."""
    if not (rf.Pc > 0.0):
        raise DomainError("device circuit power Pc must be > 0")
    return rf.B / rf.Pc * avg_backscatter_spectral(backscatter_gain(w, ch))


def ee_pair(w, ch: ChannelSet, rf: RFParams) -> EEPair:
    """Both energy efficiencies at one beamformer."""
    return EEPair(ee_pt=ee_pt(w, ch, rf), ee_bd=ee_bd(w, ch, rf))
