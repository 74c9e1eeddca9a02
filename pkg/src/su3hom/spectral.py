"""Gaussian source/detector spectra and their delayed overlap integrals.

A delay ``tau`` multiplies the source amplitude by ``exp(+i omega tau)``,
so the overlap of a delayed source photon with a detector mode is

    O(tau) = integral d omega  conj(phi_D(omega)) phi_S(omega) exp(i omega tau).

For Gaussians this has the closed form

    O(tau) = sqrt(2 st / sb) exp(-(w0 - wd)^2 / (4 sb^2)) exp(i m tau) exp(-st^2 tau^2)

with sb^2 = s0^2 + sd^2, st^2 = (1/s0^2 + 1/sd^2)^-1 and the weighted mean
carrier m = (sd^2 w0 + s0^2 wd) / (s0^2 + sd^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy.integrate import trapezoid

__all__ = [
    "GaussianSpectrum",
    "SpectralSetup",
    "OverlapStats",
    "QuadratureSpec",
    "overlap_stats",
    "gaussian_overlap",
    "quadrature_overlap",
    "covering_window",
]

WINDOW_WIDTHS = 10.0
DEFAULT_NODES = 2001


@dataclass(frozen=True)
class GaussianSpectrum:
    """Normalized Gaussian amplitude (2 pi w^2)^(-1/4) exp(-(omega - c)^2 / (4 w^2))."""

    carrier: float
    width: float

    def __post_init__(self):
        if not math.isfinite(self.carrier):
            raise ValueError(f"carrier must be finite, got {self.carrier!r}")
        if not (math.isfinite(self.width) and self.width > 0):
            raise ValueError(f"width must be finite and > 0, got {self.width!r}")

    def __call__(self, omega):
        omega = np.asarray(omega, dtype=float)
        return (2 * math.pi * self.width**2) ** -0.25 * np.exp(
            -((omega - self.carrier) ** 2) / (4 * self.width**2)
        )


@dataclass(frozen=True)
class SpectralSetup:
    source: GaussianSpectrum
    detectors: tuple[GaussianSpectrum, ...]

    def __post_init__(self):
        detectors = tuple(self.detectors)
        if len(detectors) not in (2, 3):
            raise ValueError(f"expected 2 or 3 detectors, got {len(detectors)}")
        object.__setattr__(self, "detectors", detectors)

    @property
    def ports(self) -> int:
        return len(self.detectors)

    @property
    def spectra(self) -> tuple[GaussianSpectrum, ...]:
        return (self.source, *self.detectors)


@dataclass(frozen=True)
class OverlapStats:
    sigma_bar_sq: float
    varsigma_bar_sq: float  # a weighted mean carrier, not a variance
    sigma_tilde_sq: float
    lam: float


@dataclass(frozen=True)
class QuadratureSpec:
    """Trapezoid rule with ``nodes_per_axis`` points on ``window = (lo, hi)``."""

    nodes_per_axis: int
    window: tuple[float, float]

    def __post_init__(self):
        if int(self.nodes_per_axis) < 3:
            raise ValueError(f"need at least 3 nodes, got {self.nodes_per_axis}")
        lo, hi = (float(w) for w in self.window)
        if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
            raise ValueError(f"empty or non-finite window {self.window!r}")
        object.__setattr__(self, "window", (lo, hi))

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(*self.window, int(self.nodes_per_axis))

    def covers(self, spectra: Sequence[GaussianSpectrum]) -> bool:
        lo, hi = self.window
        return all(
            lo <= s.carrier - WINDOW_WIDTHS * s.width
            and s.carrier + WINDOW_WIDTHS * s.width <= hi
            for s in spectra
        )


def covering_window(spectra: Sequence[GaussianSpectrum]) -> tuple[float, float]:
    """[min carrier - 10 max width, max carrier + 10 max width]."""
    w = max(s.width for s in spectra)
    return (
        min(s.carrier for s in spectra) - WINDOW_WIDTHS * w,
        max(s.carrier for s in spectra) + WINDOW_WIDTHS * w,
    )


def overlap_stats(source: GaussianSpectrum, detector: GaussianSpectrum) -> OverlapStats:
    s0, si = source.width**2, detector.width**2
    w0, wi = source.carrier, detector.carrier
    sigma_bar_sq = s0 + si
    sigma_tilde_sq = 1.0 / (1.0 / s0 + 1.0 / si)
    return OverlapStats(
        sigma_bar_sq=sigma_bar_sq,
        varsigma_bar_sq=(si * w0 + s0 * wi) / sigma_bar_sq,
        sigma_tilde_sq=sigma_tilde_sq,
        lam=math.sqrt(2 * sigma_tilde_sq / sigma_bar_sq)
        * math.exp(-((w0 - wi) ** 2) / (2 * sigma_bar_sq)),
    )


def gaussian_overlap(source: GaussianSpectrum, detector: GaussianSpectrum, tau):
    """Closed-form O(tau); ``tau`` may be a scalar or an array."""
    st = overlap_stats(source, detector)
    amp = math.sqrt(2 * math.sqrt(st.sigma_tilde_sq / st.sigma_bar_sq)) * math.exp(
        -((source.carrier - detector.carrier) ** 2) / (4 * st.sigma_bar_sq)
    )
    tau = np.asarray(tau, dtype=float)
    out = amp * np.exp(1j * st.varsigma_bar_sq * tau - st.sigma_tilde_sq * tau**2)
    return complex(out) if out.ndim == 0 else out


Profile = Union[GaussianSpectrum, Callable[[np.ndarray], np.ndarray]]


def quadrature_overlap(
    source_fn: Profile,
    detector_fn: Profile,
    tau: float,
    quad: Optional[QuadratureSpec] = None,
) -> complex:
    """Trapezoid evaluation of O(tau) for arbitrary spectral amplitudes.

    ``quad`` may be omitted only when both profiles are GaussianSpectrum;
    the default then uses at least 2001 nodes on the covering window,
    more when ``tau`` is long enough to alias the oscillating factor.
    """
    if quad is None:
        if not (
            isinstance(source_fn, GaussianSpectrum)
            and isinstance(detector_fn, GaussianSpectrum)
        ):
            raise ValueError("a QuadratureSpec is required for non-Gaussian profiles")
        lo, hi = covering_window([source_fn, detector_fn])
        w_min = min(source_fn.width, detector_fn.width)
        needed = math.ceil((hi - lo) * (2 * abs(tau) + 12 / w_min) / (2 * math.pi)) + 1
        quad = QuadratureSpec(max(DEFAULT_NODES, needed), (lo, hi))
    w = quad.nodes
    integrand = (
        np.conj(np.asarray(detector_fn(w), dtype=complex))
        * np.asarray(source_fn(w), dtype=complex)
        * np.exp(1j * w * tau)
    )
    return complex(trapezoid(integrand, w))
