"""Permanents, determinants and immanants of small complex matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

__all__ = [
    "Permutation3",
    "S3_PERMUTATIONS",
    "CLASS_SIZES",
    "CHARACTERS",
    "DIMENSIONS",
    "character",
    "MatrixFunctionSet",
    "permanent",
    "permanent_by_expansion",
    "ryser_permanent",
    "determinant",
    "immanant",
    "weighted_sum",
    "submatrix_permanent",
    "permute_rows",
    "matrix_functions",
]

MAX_PERMANENT_SIZE = 16


@dataclass(frozen=True)
class Permutation3:
    """Permutation of {1, 2, 3} in one-line notation: ``images[i-1] = p(i)``."""

    images: tuple[int, int, int]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of (1, 2, 3): {self.images!r}")
        object.__setattr__(self, "images", images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __str__(self) -> str:
        return "".join(map(str, self.images))

    @property
    def zero_based(self) -> tuple[int, int, int]:
        return tuple(i - 1 for i in self.images)

    @property
    def fixed_points(self) -> int:
        return sum(1 for i, p in enumerate(self.images, 1) if i == p)

    @property
    def cycle_class(self) -> str:
        return {3: "identity", 1: "transposition", 0: "3-cycle"}[self.fixed_points]

    @property
    def sign(self) -> int:
        return -1 if self.cycle_class == "transposition" else 1

    def compose(self, other: "Permutation3") -> "Permutation3":
        """(self o other)(i) = self(other(i))."""
        return Permutation3(tuple(self(other(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Permutation3":
        inv = [0, 0, 0]
        for i, p in enumerate(self.images, 1):
            inv[p - 1] = i
        return Permutation3(tuple(inv))


# (123), (132), (213), (231), (312), (321)
S3_PERMUTATIONS: tuple[Permutation3, ...] = tuple(
    Permutation3(p) for p in itertools.permutations((1, 2, 3))
)

CLASS_SIZES = {"identity": 1, "transposition": 3, "3-cycle": 2}

# Irreducible characters of S3, keyed by partition label.
CHARACTERS = {
    "symmetric": {"identity": 1, "transposition": 1, "3-cycle": 1},
    "mixed": {"identity": 2, "transposition": 0, "3-cycle": -1},
    "antisymmetric": {"identity": 1, "transposition": -1, "3-cycle": 1},
}
DIMENSIONS = {label: chars["identity"] for label, chars in CHARACTERS.items()}


def character(label: str, p: Permutation3) -> int:
    return CHARACTERS[label][p.cycle_class]


@dataclass(frozen=True)
class MatrixFunctionSet:
    per: complex
    det: complex
    imm: complex


def _as_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _as_3x3(matrix) -> np.ndarray:
    a = _as_square(matrix)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    return a


def _s3_sum(a: np.ndarray, label: str) -> complex:
    total = 0j
    for p in S3_PERMUTATIONS:
        chi = character(label, p)
        if chi:
            i, j, k = p.zero_based
            total += chi * (a[0, i] * a[1, j] * a[2, k])
    return complex(total)


def permanent_by_expansion(matrix) -> complex:
    """Brute-force sum over all n! permutations."""
    a = _as_square(matrix)
    n = a.shape[0]
    rows = np.arange(n)
    total = 0j
    for cols in itertools.permutations(range(n)):
        total += np.prod(a[rows, cols])
    return complex(total)


def ryser_permanent(matrix) -> complex:
    """Ryser's inclusion-exclusion formula, O(2^n n) per column subset.

    per(A) = (-1)^n sum_{S subset cols} (-1)^{|S|} prod_i sum_{j in S} A_ij
    """
    a = _as_square(matrix)
    n = a.shape[0]
    if n > MAX_PERMANENT_SIZE:
        raise ValueError(f"permanent limited to n <= {MAX_PERMANENT_SIZE}, got {n}")
    masks = np.arange(1, 1 << n)
    bits = ((masks[:, None] >> np.arange(n)) & 1).astype(float)
    row_sums = bits @ a.T  # (subsets, rows)
    signs = (-1.0) ** bits.sum(axis=1)
    return complex((-1) ** n * np.sum(signs * np.prod(row_sums, axis=1)))


def permanent(matrix) -> complex:
    """Permanent of an n x n complex matrix, 1 <= n <= 16.

    Direct expansion for n <= 3, Ryser's formula above that.
    """
    a = _as_square(matrix)
    n = a.shape[0]
    if n == 0 or n > MAX_PERMANENT_SIZE:
        raise ValueError(f"permanent requires 1 <= n <= {MAX_PERMANENT_SIZE}, got {n}")
    if n == 1:
        return complex(a[0, 0])
    if n == 2:
        return complex(a[0, 0] * a[1, 1] + a[0, 1] * a[1, 0])
    if n == 3:
        return _s3_sum(a, "symmetric")
    return ryser_permanent(a)


def determinant(matrix) -> complex:
    """Signed six-term expansion of a 3x3 determinant."""
    return _s3_sum(_as_3x3(matrix), "antisymmetric")


def immanant(matrix) -> complex:
    """(2,1) immanant with raw characters: 2 on the identity, 0 on
    transpositions, -1 on 3-cycles."""
    return _s3_sum(_as_3x3(matrix), "mixed")


def weighted_sum(matrix) -> complex:
    """per/6 + imm/3 + det/6, which equals the diagonal product A11 A22 A33."""
    a = _as_3x3(matrix)
    return permanent(a) / 6 + immanant(a) / 3 + determinant(a) / 6


def submatrix_permanent(matrix, k: int, j: int) -> complex:
    """Permanent of the 2x2 minor with row ``k`` and column ``j`` removed (1-based)."""
    a = _as_3x3(matrix)
    if k not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError(f"row/column indices must be in 1..3, got ({k}, {j})")
    minor = np.delete(np.delete(a, k - 1, axis=0), j - 1, axis=1)
    return complex(minor[0, 0] * minor[1, 1] + minor[0, 1] * minor[1, 0])


def permute_rows(matrix, p: Permutation3) -> np.ndarray:
    """Row i of the result is row p(i) of the input."""
    a = _as_3x3(matrix)
    return a[list(p.zero_based), :]


def matrix_functions(matrix) -> MatrixFunctionSet:
    a = _as_3x3(matrix)
    return MatrixFunctionSet(per=permanent(a), det=determinant(a), imm=immanant(a))
