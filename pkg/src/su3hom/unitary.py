"""SU(2) and SU(3) interferometer matrices from Euler angles.

Row index is the output port, column index the input port: the creation
operator of input port ``j`` is mapped to ``sum_k R[k, j] a_k^dagger``.
"""

from __future__ import annotations

import math
import re
from dataclasses import astuple, dataclass, fields
from typing import Sequence, Union

import numpy as np

__all__ = [
    "EulerSU2",
    "OmegaSU3",
    "su2_rotation",
    "embed_r23",
    "embed_r12",
    "diagonal_phases",
    "build_su3",
    "balanced_symmetric_bs",
    "unitarity_defect",
    "parse_angle",
]


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"angle must be finite, got {v!r}")


@dataclass(frozen=True)
class EulerSU2:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        _check_finite(self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class OmegaSU3:
    """Eight generalized Euler angles, in the order
    (alpha1, beta1, alpha2, beta2, alpha3, beta3, gamma1, gamma2)."""

    alpha1: float
    beta1: float
    alpha2: float
    beta2: float
    alpha3: float
    beta3: float
    gamma1: float
    gamma2: float

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, float(getattr(self, f.name)))
        _check_finite(*astuple(self))

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "OmegaSU3":
        values = [float(v) for v in values]
        if len(values) != 8:
            raise ValueError(f"expected 8 angles, got {len(values)}")
        return cls(*values)

    @classmethod
    def from_string(cls, text: str) -> "OmegaSU3":
        """Parse eight comma-separated angles; each may use ``pi``, e.g. ``pi/2``."""
        return cls.from_sequence([parse_angle(tok) for tok in text.split(",")])


_PI_RE = re.compile(
    r"^(?P<sign>[+-]?)(?:(?P<coef>\d+(?:\.\d*)?)\*?)?pi(?:/(?P<den>\d+(?:\.\d*)?))?$"
)


def parse_angle(token: str) -> float:
    """Parse ``1.25``, ``pi``, ``-pi/2``, ``3pi/4`` or ``2*pi/3``."""
    tok = token.strip().replace(" ", "")
    m = _PI_RE.match(tok)
    if m is None:
        try:
            value = float(tok)
        except ValueError:
            raise ValueError(f"cannot parse angle {token!r}") from None
    else:
        value = math.pi * float(m["coef"] or 1.0) / float(m["den"] or 1.0)
        if m["sign"] == "-":
            value = -value
    _check_finite(value)
    return value


AnglesSU2 = Union[EulerSU2, Sequence[float]]
AnglesSU3 = Union[OmegaSU3, Sequence[float]]


def su2_rotation(angles: AnglesSU2) -> np.ndarray:
    """Two-mode interferometer matrix for Euler angles (alpha, beta, gamma).

    Parameters
    ----------
    angles : EulerSU2 or sequence of three floats

    Returns
    -------
    (2, 2) complex ndarray
    """
    if not isinstance(angles, EulerSU2):
        angles = EulerSU2(*(float(a) for a in angles))
    a, b, g = angles.alpha, angles.beta, angles.gamma
    c, s = math.cos(b / 2), math.sin(b / 2)
    return np.array(
        [
            [np.exp(-1j * (a + g)) * c, -np.exp(-1j * (a - g)) * s],
            [np.exp(1j * (a - g)) * s, np.exp(1j * (a + g)) * c],
        ],
        dtype=complex,
    )


def _su2_block(alpha: float, beta: float) -> np.ndarray:
    _check_finite(alpha, beta)
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    return np.array(
        [[c, -np.exp(-1j * alpha) * s], [np.exp(1j * alpha) * s, c]], dtype=complex
    )


def embed_r23(alpha: float, beta: float) -> np.ndarray:
    """R23(alpha, beta, -alpha): SU(2) block acting on modes 2 and 3."""
    out = np.eye(3, dtype=complex)
    out[1:, 1:] = _su2_block(alpha, beta)
    return out


def embed_r12(alpha: float, beta: float) -> np.ndarray:
    """R12(alpha, beta, -alpha): SU(2) block acting on modes 1 and 2."""
    out = np.eye(3, dtype=complex)
    out[:2, :2] = _su2_block(alpha, beta)
    return out


def diagonal_phases(gamma1: float, gamma2: float) -> np.ndarray:
    """exp(-i gamma1 h1) exp(-i gamma2 h2) on the single-photon states.

    h1 = 2 n1 - n2 - n3 and h2 = (n2 - n3) / 2, so the diagonal is
    (exp(-2i g1), exp(i g1 - i g2/2), exp(i g1 + i g2/2)).
    """
    _check_finite(gamma1, gamma2)
    return np.diag(
        [
            np.exp(-2j * gamma1),
            np.exp(1j * gamma1 - 0.5j * gamma2),
            np.exp(1j * gamma1 + 0.5j * gamma2),
        ]
    ).astype(complex)


def build_su3(omega: AnglesSU3) -> np.ndarray:
    """Three-mode interferometer R(Omega) = R23 R12 R23 exp(-i g1 h1) exp(-i g2 h2).

    The phase factor is the rightmost one, so it acts first on input states.
    """
    if not isinstance(omega, OmegaSU3):
        omega = OmegaSU3.from_sequence(omega)
    a1, b1, a2, b2, a3, b3, g1, g2 = omega.as_tuple()
    return (
        embed_r23(a1, b1)
        @ embed_r12(a2, b2)
        @ embed_r23(a3, b3)
        @ diagonal_phases(g1, g2)
    )


def balanced_symmetric_bs() -> np.ndarray:
    """The 50:50 symmetric beam splitter, alpha = pi/4 = -gamma, beta = pi/2."""
    return su2_rotation(EulerSU2(math.pi / 4, math.pi / 2, -math.pi / 4))


def unitarity_defect(u: np.ndarray) -> float:
    """Max-entry norm of U^dagger U - I."""
    u = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
