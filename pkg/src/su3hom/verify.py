"""Randomized self-check suites behind ``su3hom verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import matfun
from .coincidence import DelayPair, rate_p111
from .oracle import quadrature_rate
from .spectral import GaussianSpectrum, SpectralSetup, gaussian_overlap, quadrature_overlap
from .symmetry import input_norms, isotypic_traces, ordering_block
from .unitary import build_su3, unitarity_defect

__all__ = ["Check", "SUITES", "run_suite", "random_omega", "random_complex", "random_scenario"]

OMEGA_B = (0, math.pi / 2, 0, math.pi / 2, 0, math.pi / 2, 0, 0)
OMEGA_A = (0, math.pi / 2, math.pi / 2, math.pi, 0, math.pi / 2, math.pi / 2, math.pi)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def random_omega(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(0, 2 * math.pi, 8)


def random_complex(rng: np.random.Generator, n: int = 3) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_scenario(rng: np.random.Generator):
    """Random Omega, carriers in [-1, 1], widths in [0.05, 1], delays in [-2, 2]."""
    spectra = [
        GaussianSpectrum(rng.uniform(-1, 1), rng.uniform(0.05, 1)) for _ in range(4)
    ]
    setup = SpectralSetup(spectra[0], tuple(spectra[1:]))
    delays = DelayPair(*rng.uniform(-2, 2, 2))
    return build_su3(random_omega(rng)), setup, delays


def _rel(a, b) -> float:
    return abs(a - b) / abs(b) if b != 0 else abs(a - b)


def _identities(rng, count) -> list[Check]:
    worst = max(
        _rel(matfun.weighted_sum(a), a[0, 0] * a[1, 1] * a[2, 2])
        for a in (random_complex(rng) for _ in range(count))
    )
    out = [Check("weighted sum = diagonal product", worst < 1e-12, f"max rel err {worst:.3g}")]

    bad = 0
    for _ in range(count // 10 + 1):
        a = random_complex(rng)
        per, det = matfun.permanent(a), matfun.determinant(a)
        for p in matfun.S3_PERMUTATIONS:
            b = matfun.permute_rows(a, p)
            bad += _rel(matfun.permanent(b), per) > 1e-12
            bad += _rel(matfun.determinant(b), p.sign * det) > 1e-12
    out.append(Check("row-permutation covariance", bad == 0, f"{bad} violations"))

    worst = 0.0
    for n in range(1, 7):
        a = random_complex(rng, n)
        worst = max(worst, _rel(matfun.ryser_permanent(a), matfun.permanent_by_expansion(a)))
    out.append(Check("Ryser vs expansion, n <= 6", worst < 1e-12, f"max rel err {worst:.3g}"))

    labels = list(matfun.CHARACTERS)
    gram = np.array(
        [
            [
                sum(
                    size * matfun.CHARACTERS[x][c] * matfun.CHARACTERS[y][c]
                    for c, size in matfun.CLASS_SIZES.items()
                )
                for y in labels
            ]
            for x in labels
        ]
    )
    out.append(Check("character orthogonality", bool(np.all(gram == 6 * np.eye(3))), str(gram.tolist())))

    worst_u = worst_d = 0.0
    for _ in range(count):
        r = build_su3(random_omega(rng))
        worst_u = max(worst_u, unitarity_defect(r))
        worst_d = max(worst_d, abs(np.linalg.det(r) - 1))
    out.append(
        Check(
            "random Omega unitary with det 1",
            worst_u < 1e-12 and worst_d < 1e-12,
            f"max |R^dag R - I| {worst_u:.3g}, max |det - 1| {worst_d:.3g}",
        )
    )
    return out


def _observations(rng, count) -> list[Check]:
    worst = 0.0
    for i in range(2 * count):
        a = build_su3(random_omega(rng)) if i % 2 else random_complex(rng)
        f = matfun.matrix_functions(a)
        t = isotypic_traces(ordering_block(a))
        worst = max(worst, _rel(t[0], f.per), _rel(t[1], 2 * f.imm), _rel(t[2], f.det))
    out = [Check("isotypic traces = (per, 2 imm, det)", worst < 1e-10, f"max rel err {worst:.3g}")]
    norms = input_norms()
    err = max(abs(x - y) for x, y in zip(norms, (1 / 6, 2 / 3, 1 / 6)))
    out.append(Check("input isotypic norms (1/6, 2/3, 1/6)", err < 1e-14, f"{norms}"))
    per_b = matfun.permanent(build_su3(OMEGA_B))
    out.append(
        Check(
            "fig1b permanent = -1/(4 sqrt 2)",
            abs(per_b + 1 / (4 * math.sqrt(2))) < 1e-10,
            f"{per_b:.12g}",
        )
    )
    per_a = matfun.permanent(build_su3(OMEGA_A))
    out.append(Check("fig1a permanent = 0", abs(per_a) < 1e-12, f"{abs(per_a):.3g}"))
    return out


def _oracle(rng, count) -> list[Check]:
    worst = 0.0
    for _ in range(count):
        r, setup, d = random_scenario(rng)
        worst = max(worst, _rel(rate_p111(r, setup, d), quadrature_rate(r, setup, d)))
    return [Check("analytic rate vs quadrature oracle", worst < 1e-6, f"max rel err {worst:.3g}")]


def _spectral(rng, count) -> list[Check]:
    worst = 0.0
    for _ in range(count):
        s = GaussianSpectrum(rng.uniform(-1, 1), rng.uniform(0.05, 1))
        d = GaussianSpectrum(rng.uniform(-1, 1), rng.uniform(0.05, 1))
        tau = rng.uniform(-2, 2)
        worst = max(worst, _rel(gaussian_overlap(s, d, tau), quadrature_overlap(s, d, tau)))
    return [Check("closed-form overlap vs quadrature", worst < 1e-8, f"max rel err {worst:.3g}")]


SUITES: dict[str, Callable] = {
    "identities": _identities,
    "observations": _observations,
    "oracle": _oracle,
    "spectral": _spectral,
}
DEFAULT_COUNTS = {"identities": 1000, "observations": 100, "oracle": 20, "spectral": 100}


def run_suite(name: str, seed: int = 0, count: int | None = None) -> list[Check]:
    rng = np.random.default_rng(seed)
    return SUITES[name](rng, DEFAULT_COUNTS[name] if count is None else count)
