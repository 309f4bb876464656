"""Scenario geometry, path loss, ULA steering and Rician channel draws.

Produces the noise/reflection-normalized channels consumed by every
optimization formula: ``h_hat = h / sigma`` for the direct link and
``g_hat = sqrt(rho) * f * g / sigma`` for the cascaded backscatter link.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ValidationError

SPEED_OF_LIGHT = 2.99792458e8  # m/s

# theta -> 0 would stack the backscatter device on top of the receiver;
# reject separations below this floor.
MIN_BD_PR_DISTANCE = 1.0  # m


@dataclass(frozen=True)
class ScenarioGeometry:
    """Node placement and fading parameters.

    Attributes:
        M: transmit antenna count.
        d0: distance (m) from transmitter to both receiver and backscatter
            device.
        theta: angular separation (rad) of the two links at the transmitter.
        K_factor: Rician K as a linear power ratio (LoS / NLoS).
        alpha_TR / alpha_TD / alpha_DR: path-loss exponents of the
            transmitter-receiver, transmitter-device and device-receiver
            links.
    """

    M: int
    d0: float
    theta: float
    K_factor: float
    alpha_TR: float
    alpha_TD: float
    alpha_DR: float

    def __post_init__(self):
        if self.M < 1:
            raise ValidationError("antenna count M must be >= 1")
        if not (self.d0 > 0.0):
            raise ValidationError("d0 must be > 0")
        if not (0.0 < self.theta <= math.pi):
            raise ValidationError("theta must lie in (0, pi]")
        if not (self.K_factor >= 0.0):
            raise ValidationError("K_factor must be >= 0")
        for name in ("alpha_TR", "alpha_TD", "alpha_DR"):
            a = getattr(self, name)
            if not (1.5 <= a <= 6.0):
                raise ValidationError(f"{name}={a} outside [1.5, 6]")


@dataclass(frozen=True)
class RFParams:
    """Radio and power-consumption parameters.

    Attributes:
        B: bandwidth (Hz).
        sigma2: noise power (W).
        rho: power reflection coefficient of the backscatter device, [0, 1].
        mu: power-amplifier inefficiency multiplier, > 1.
        Ps: transmitter circuit power (W).
        Pc: backscatter-device circuit power (W).
        Pmax: transmit power budget (W).
        carrier_hz: carrier frequency (Hz).
    """

    B: float
    sigma2: float
    rho: float
    mu: float
    Ps: float
    Pc: float
    Pmax: float
    carrier_hz: float

    def __post_init__(self):
        if not (self.B > 0.0):
            raise ValidationError("bandwidth B must be > 0")
        if not (self.sigma2 > 0.0):
            raise ValidationError("noise power sigma2 must be > 0")
        if not (0.0 <= self.rho <= 1.0):
            raise ValidationError("rho must lie in [0, 1]")
        if not (self.mu > 1.0):
            raise ValidationError("amplifier inefficiency mu must be > 1")
        for name in ("Ps", "Pc", "Pmax"):
            if getattr(self, name) < 0.0:
                raise ValidationError(f"{name} must be >= 0")
        if not (self.carrier_hz > 0.0):
            raise ValidationError("carrier_hz must be > 0")


@dataclass(frozen=True)
class ChannelSet:
    """Raw channels plus their normalized forms.

    ``h_hat = h / sigma`` and ``g_hat = sqrt(rho) * f * g / sigma`` are
    recomputable bit-exactly from the raw fields; treat all arrays as
    read-only.
    """

    h: np.ndarray
    g: np.ndarray
    f: complex
    sigma: float
    rho: float
    h_hat: np.ndarray = field(init=False)
    g_hat: np.ndarray = field(init=False)

    def __post_init__(self):
        h = np.asarray(self.h, dtype=np.complex128)
        g = np.asarray(self.g, dtype=np.complex128)
        if h.ndim != 1 or g.ndim != 1 or h.shape != g.shape:
            raise ValidationError("h and g must be 1-D vectors of equal length")
        if not (self.sigma > 0.0):
            raise ValidationError("sigma must be > 0")
        if not (0.0 <= self.rho <= 1.0):
            raise ValidationError("rho must lie in [0, 1]")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h_hat", h / self.sigma)
        object.__setattr__(
            self, "g_hat", (math.sqrt(self.rho) * self.f / self.sigma) * g
        )
        for name in ("h", "g", "h_hat", "g_hat"):
            arr = getattr(self, name)
            if not np.all(np.isfinite(arr.view(np.float64))):
                raise ValidationError(f"channel {name} must be finite")

    @property
    def M(self) -> int:
        return self.h.shape[0]


def path_loss(d: float, alpha_exp: float, carrier_hz: float) -> float:
    """Large-scale channel gain beta0 * d^-alpha with beta0 = (lambda/4pi)^2."""
    if not (d > 0.0):
        raise DomainError("distance must be > 0")
    lam = SPEED_OF_LIGHT / carrier_hz
    beta0 = (lam / (4.0 * math.pi)) ** 2
    return beta0 * d ** (-alpha_exp)


def steering(M: int, phi: float) -> np.ndarray:
    """Half-wavelength ULA steering vector, entry m = exp(-j pi m sin phi)."""
    if M < 1:
        raise DomainError("M must be >= 1")
    return np.exp(-1j * math.pi * np.arange(M) * math.sin(phi))


def bd_pr_distance(geometry: ScenarioGeometry) -> float:
    """Distance between backscatter device and receiver: 2 d0 sin(theta/2)."""
    d1 = 2.0 * geometry.d0 * math.sin(0.5 * geometry.theta)
    if d1 < MIN_BD_PR_DISTANCE:
        raise ValidationError(
            f"BD-PR distance {d1:.3g} m below the {MIN_BD_PR_DISTANCE} m floor"
        )
    return d1


def _cn_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    """Unit-variance circularly-symmetric complex Gaussian draws."""
    re_im = rng.standard_normal((2, n))
    return (re_im[0] + 1j * re_im[1]) / math.sqrt(2.0)


def gen_channels(
    geometry: ScenarioGeometry, rf: RFParams, seed: int
) -> ChannelSet:
    """Draw one Rician fading realization of all three links.

    Each link mixes a deterministic LoS term with a CSCG NLoS term as
    sqrt(K/(K+1)) * LoS + sqrt(1/(K+1)) * NLoS and is scaled by the square
    root of its path-loss gain. The direct link points at angle 0, the
    transmitter-device link at ``theta``; the scalar device-receiver link
    gets a uniformly random LoS phase (only its magnitude enters any
    downstream formula).

    Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64) with a
    fixed draw order: direct-link NLoS (2 x M normals), device-link NLoS
    (2 x M), scalar-link NLoS (2 x 1), scalar-link LoS phase (1 uniform).
    Identical seeds therefore give bit-identical channels, and two
    geometries that differ only in angles share their NLoS draws.
    """
    d1 = bd_pr_distance(geometry)
    beta_h = path_loss(geometry.d0, geometry.alpha_TR, rf.carrier_hz)
    beta_g = path_loss(geometry.d0, geometry.alpha_TD, rf.carrier_hz)
    beta_f = path_loss(d1, geometry.alpha_DR, rf.carrier_hz)

    K = geometry.K_factor
    los_w = math.sqrt(K / (K + 1.0))
    nlos_w = math.sqrt(1.0 / (K + 1.0))

    rng = np.random.default_rng(seed)
    n_h = _cn_vector(rng, geometry.M)
    n_g = _cn_vector(rng, geometry.M)
    n_f = complex(_cn_vector(rng, 1)[0])
    psi_f = rng.uniform(0.0, 2.0 * math.pi)

    h = math.sqrt(beta_h) * (los_w * steering(geometry.M, 0.0) + nlos_w * n_h)
    g = math.sqrt(beta_g) * (
        los_w * steering(geometry.M, geometry.theta) + nlos_w * n_g
    )
    f = math.sqrt(beta_f) * (los_w * complex(np.exp(1j * psi_f)) + nlos_w * n_f)

    return ChannelSet(
        h=h, g=g, f=f, sigma=math.sqrt(rf.sigma2), rho=rf.rho
    )
