"""Two- and three-fold coincidence rates with rank-1 detector projectors.

Photon ``j`` enters input port ``j`` with the source spectrum delayed by
``taus[j]`` (port 1 is never delayed). Detector ``k`` projects onto its own
single spectral mode, so the coincidence amplitude is one coherent sum

    A = sum_sigma prod_j R[sigma(j), j] O_sigma(j)(tau_j)

i.e. the permanent of the elementwise product of R with the port/photon
overlap table. The rate is |A|^2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .matfun import permanent
from .spectral import SpectralSetup, gaussian_overlap

__all__ = [
    "DelayPair",
    "ZeroDelayReport",
    "overlap_table",
    "amplitude3",
    "rate_p111",
    "rate_p111_grid",
    "rate_p11",
    "zero_delay_rate",
]


@dataclass(frozen=True)
class DelayPair:
    """tau1 delays the port-2 photon, tau2 the port-3 photon, relative to port 1."""

    tau1: float
    tau2: float

    def __post_init__(self):
        if not (math.isfinite(self.tau1) and math.isfinite(self.tau2)):
            raise ValueError(f"delays must be finite, got ({self.tau1}, {self.tau2})")

    @property
    def taus(self) -> tuple[float, float, float]:
        return (0.0, self.tau1, self.tau2)


def _check_dims(r: np.ndarray, setup: SpectralSetup, n: int) -> np.ndarray:
    r = np.asarray(r, dtype=complex)
    if r.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} interferometer, got shape {r.shape}")
    if setup.ports != n:
        raise ValueError(f"expected {n} detectors, got {setup.ports}")
    return r


def overlap_table(setup: SpectralSetup, taus) -> np.ndarray:
    """table[k, j] = overlap of detector k with the source delayed by taus[j]."""
    return np.array(
        [[gaussian_overlap(setup.source, det, t) for t in taus] for det in setup.detectors]
    )


def amplitude3(r, setup: SpectralSetup, d: DelayPair) -> complex:
    r = _check_dims(r, setup, 3)
    return permanent(r * overlap_table(setup, d.taus))


def rate_p111(r, setup: SpectralSetup, d: DelayPair) -> float:
    return abs(amplitude3(r, setup, d)) ** 2


def rate_p11(b, setup: SpectralSetup, tau: float) -> float:
    """Twofold coincidence rate; the port-2 photon is delayed by ``tau``."""
    b = _check_dims(b, setup, 2)
    return abs(permanent(b * overlap_table(setup, (0.0, tau)))) ** 2


def rate_p111_grid(r, setup: SpectralSetup, tau1s, tau2s) -> np.ndarray:
    """Rates on the outer grid (tau1s x tau2s); rows follow tau1.

    Every entry depends only on its own (tau1, tau2), so any split of the
    axes into chunks gives bitwise-identical results.
    """
    r = _check_dims(r, setup, 3)
    tau1s = np.asarray(tau1s, dtype=float)
    tau2s = np.asarray(tau2s, dtype=float)
    o0 = [gaussian_overlap(setup.source, det, 0.0) for det in setup.detectors]
    o1 = [gaussian_overlap(setup.source, det, tau1s) for det in setup.detectors]
    o2 = [gaussian_overlap(setup.source, det, tau2s) for det in setup.detectors]
    amp = np.zeros((tau1s.size, tau2s.size), dtype=complex)
    for k0, k1, k2 in itertools.permutations(range(3)):
        coef = r[k0, 0] * r[k1, 1] * r[k2, 2] * o0[k0]
        amp += coef * np.multiply.outer(o1[k1], o2[k2])
    return np.abs(amp) ** 2


@dataclass(frozen=True)
class ZeroDelayReport:
    rate: float
    applicable: bool
    permanent: complex
    overlaps: Optional[tuple[float, ...]] = None
    factorized: Optional[float] = None
    # rate == 0 iff per == 0 or some overlap == 0, both judged at ``tol``
    dichotomy_holds: Optional[bool] = None


def zero_delay_rate(r, setup: SpectralSetup, tol: float = 1e-12) -> ZeroDelayReport:
    """Rate at tau1 = tau2 = 0 with its |Per R|^2 prod |O_k(0)|^2 factorization.

    At zero delay every photon carries the same overlap with a given detector,
    so the overlap product factors out of the permutation sum for any
    detectors. The factorization is reported only when all detectors share
    the source carrier (then every O_k(0) is real and positive).
    """
    r = _check_dims(r, setup, 3)
    rate = rate_p111(r, setup, DelayPair(0.0, 0.0))
    per = permanent(r)
    if any(det.carrier != setup.source.carrier for det in setup.detectors):
        return ZeroDelayReport(rate=rate, applicable=False, permanent=per)
    overlaps = tuple(
        abs(gaussian_overlap(setup.source, det, 0.0)) for det in setup.detectors
    )
    factorized = abs(per) ** 2 * math.prod(o**2 for o in overlaps)
    vanishes = abs(per) < tol or min(overlaps) < tol
    return ZeroDelayReport(
        rate=rate,
        applicable=True,
        permanent=per,
        overlaps=overlaps,
        factorized=factorized,
        dichotomy_holds=(rate < tol) == vanishes,
    )
