"""Brute-force coincidence rates for cross-checking :mod:`su3hom.coincidence`.

Nothing here uses the permanent shortcut or the closed-form overlaps: the
scattering kernel comes from expanding prod_j (sum_k R[k, j] a_k^dagger(w_j))
over every port assignment, and the frequency integrals are done by the
trapezoid rule.
"""

from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

import numpy as np
from scipy.integrate import trapezoid

from .coincidence import DelayPair
from .spectral import QuadratureSpec, SpectralSetup, covering_window

__all__ = [
    "DEFAULT_ORACLE_NODES",
    "fock_amplitude",
    "default_quadrature",
    "max_node_spacing",
    "projected_amplitude",
    "quadrature_rate",
    "quadrature_rate_p11",
]

DEFAULT_ORACLE_NODES = 1001
MAX_UNFACTORIZED_NODES = 201


def fock_amplitude(r, out_freqs: Sequence[float], in_freqs: Sequence[float]) -> complex:
    """Coefficient of the output state with frequency ``out_freqs[k]`` in port k.

    ``in_freqs[j]`` is the frequency of the photon entering port j. All
    n**n port assignments are expanded and the terms whose (port, frequency)
    multiset matches the requested output are collected.
    """
    r = np.asarray(r, dtype=complex)
    n = r.shape[0]
    if len(set(in_freqs)) != len(in_freqs):
        raise ValueError("input frequencies must be distinct")
    if len(in_freqs) != n or len(out_freqs) != n:
        raise ValueError(f"expected {n} input and output frequencies")
    target = sorted(enumerate(out_freqs))
    total = 0j
    for ports in itertools.product(range(n), repeat=n):
        created = sorted(zip(ports, in_freqs))
        if created == target:
            total += np.prod([r[k, j] for j, k in enumerate(ports)])
    return complex(total)


def max_node_spacing(setup: SpectralSetup, taus: Sequence[float]) -> float:
    """Largest trapezoid step that keeps aliasing of exp(i w tau) below ~e^-70.

    The aliased copy of a Gaussian integrand of width ~ w_min / sqrt(2) sits
    at 2 pi / h - |tau| in the conjugate variable; requiring
    2 pi / h >= 2 |tau| + 12 / w_min suppresses it relative to the true value.
    """
    w_min = min(s.width for s in setup.spectra)
    tau = max((abs(t) for t in taus), default=0.0)
    return 2 * math.pi / (2 * tau + 12 / w_min)


def default_quadrature(
    setup: SpectralSetup, nodes: int = DEFAULT_ORACLE_NODES, taus: Sequence[float] = ()
) -> QuadratureSpec:
    """Covering window with at least ``nodes`` points, refined for long delays."""
    lo, hi = covering_window(setup.spectra)
    needed = int(math.ceil((hi - lo) / max_node_spacing(setup, taus))) + 1
    return QuadratureSpec(max(nodes, needed), (lo, hi))


def projected_amplitude(
    r,
    setup: SpectralSetup,
    taus: Sequence[float],
    q: Optional[QuadratureSpec] = None,
    factorize: bool = True,
) -> complex:
    """<1_D1 ... 1_Dn| R |psi(taus)> by explicit Fock bookkeeping.

    With ``factorize=False`` the n-fold frequency integral is done on the
    full tensor grid instead of as a product of one-dimensional integrals.
    """
    r = np.asarray(r, dtype=complex)
    n = setup.ports
    if r.shape != (n, n) or len(taus) != n:
        raise ValueError(f"interferometer, detectors and delays must all have size {n}")
    q = default_quadrature(setup, taus=taus) if q is None else q
    if not q.covers(setup.spectra):
        raise ValueError(
            f"quadrature window {q.window} does not cover every carrier +/- 10 widths"
        )
    step = (q.window[1] - q.window[0]) / (q.nodes_per_axis - 1)
    if step > max_node_spacing(setup, taus):
        raise ValueError(
            f"quadrature under-resolved: step {step:.3g} exceeds "
            f"{max_node_spacing(setup, taus):.3g} for delays {tuple(taus)}"
        )
    w = q.nodes
    labels = tuple(float(i + 1) for i in range(n))  # stand-in distinct frequencies
    source = setup.source(w) * np.exp(1j * np.multiply.outer(np.asarray(taus, float), w))

    total = 0j
    for photon_at_port in itertools.permutations(range(n)):
        kernel = fock_amplitude(r, [labels[j] for j in photon_at_port], labels)
        if kernel == 0:
            continue
        # factors[j]: photon j's amplitude projected on the detector it reaches
        factors = [None] * n
        for k, j in enumerate(photon_at_port):
            factors[j] = np.conj(setup.detectors[k](w)) * source[j]
        if factorize:
            total += kernel * np.prod([trapezoid(f, w) for f in factors])
        else:
            if q.nodes_per_axis > MAX_UNFACTORIZED_NODES:
                raise ValueError(
                    f"unfactorized quadrature limited to {MAX_UNFACTORIZED_NODES} nodes"
                )
            grid = factors[0]
            for f in factors[1:]:
                grid = np.multiply.outer(grid, f)
            for _ in range(n):
                grid = trapezoid(grid, w, axis=0)
            total += kernel * grid
    return complex(total)


def quadrature_rate(
    r,
    setup: SpectralSetup,
    d: DelayPair,
    q: Optional[QuadratureSpec] = None,
    factorize: bool = True,
) -> float:
    if setup.ports != 3:
        raise ValueError(f"expected 3 detectors, got {setup.ports}")
    return abs(projected_amplitude(r, setup, d.taus, q, factorize)) ** 2


def quadrature_rate_p11(
    b, setup: SpectralSetup, tau: float, q: Optional[QuadratureSpec] = None
) -> float:
    if setup.ports != 2:
        raise ValueError(f"expected 2 detectors, got {setup.ports}")
    return abs(projected_amplitude(b, setup, (0.0, tau), q)) ** 2
