"""Action of a three-mode interferometer on three distinct-frequency photons.

Basis state ``e_rho`` (rho in S3) puts the photon of frequency omega_m into
port rho(m). The ordering block is the compression of R x R x R onto this
six-dimensional one-photon-per-port subspace:

    M[rho, sigma] = prod_m R[rho(m), sigma(m)]

Relabeling the frequencies, ``e_rho -> e_{rho o pi^-1}``, commutes with M.
The isotypic projectors of that S3 action have traces against M equal to the
permanent, twice the (2,1) immanant, and the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matfun import DIMENSIONS, S3_PERMUTATIONS, Permutation3, character

__all__ = [
    "IsotypicProjectors",
    "ordering_block",
    "zero_weight_block",
    "frequency_relabeling",
    "young_projectors",
    "isotypic_traces",
    "input_norms",
]

_INDEX = {p: i for i, p in enumerate(S3_PERMUTATIONS)}


def ordering_block(r) -> np.ndarray:
    r = np.asarray(r, dtype=complex)
    if r.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {r.shape}")
    m = np.empty((6, 6), dtype=complex)
    for a, rho in enumerate(S3_PERMUTATIONS):
        for b, sigma in enumerate(S3_PERMUTATIONS):
            m[a, b] = np.prod([r[rho(k) - 1, sigma(k) - 1] for k in (1, 2, 3)])
    return m


def zero_weight_block(r) -> np.ndarray:
    """Rows/columns of kron(R, R, R) indexed by one-photon-per-port states.

    Built from the full 27-dimensional three-photon tensor, so it is an
    independent route to :func:`ordering_block`.
    """
    r = np.asarray(r, dtype=complex)
    full = np.kron(np.kron(r, r), r)
    idx = [
        9 * (p(1) - 1) + 3 * (p(2) - 1) + (p(3) - 1) for p in S3_PERMUTATIONS
    ]
    return full[np.ix_(idx, idx)]


def frequency_relabeling(pi: Permutation3) -> np.ndarray:
    """6x6 matrix Q(pi) with Q(pi) e_rho = e_{rho o pi^-1}."""
    q = np.zeros((6, 6))
    inv = pi.inverse()
    for b, rho in enumerate(S3_PERMUTATIONS):
        q[_INDEX[rho.compose(inv)], b] = 1.0
    return q


@dataclass(frozen=True)
class IsotypicProjectors:
    p_sym: np.ndarray
    p_mixed: np.ndarray
    p_anti: np.ndarray

    def items(self):
        return (("symmetric", self.p_sym), ("mixed", self.p_mixed), ("antisymmetric", self.p_anti))


def _projector(label: str) -> np.ndarray:
    return (DIMENSIONS[label] / 6) * sum(
        character(label, p) * frequency_relabeling(p) for p in S3_PERMUTATIONS
    )


def young_projectors() -> IsotypicProjectors:
    """P_lambda = (d_lambda / 6) sum_sigma chi_lambda(sigma) Q(sigma); ranks 1, 4, 1."""
    return IsotypicProjectors(
        p_sym=_projector("symmetric"),
        p_mixed=_projector("mixed"),
        p_anti=_projector("antisymmetric"),
    )


def isotypic_traces(m: np.ndarray) -> tuple[complex, complex, complex]:
    """trace(P_lambda M) for lambda = symmetric, mixed, antisymmetric."""
    proj = young_projectors()
    return tuple(complex(np.trace(p @ m)) for _, p in proj.items())


def input_norms() -> tuple[float, float, float]:
    """Squared norms of the isotypic parts of |1(w1) 1(w2) 1(w3)>.

    That state is e_identity; expected (1/6, 2/3, 1/6).
    """
    e = np.zeros(6)
    e[_INDEX[S3_PERMUTATIONS[0]]] = 1.0
    return tuple(float(np.linalg.norm(p @ e) ** 2) for _, p in young_projectors().items())

