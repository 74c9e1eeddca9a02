import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from su3hom.matfun import S3_PERMUTATIONS, determinant, immanant, permanent
from su3hom.symmetry import (
    frequency_relabeling,
    input_norms,
    isotypic_traces,
    ordering_block,
    young_projectors,
    zero_weight_block,
)
from su3hom.unitary import build_su3

from conftest import OMEGA_B, matrices3, omegas, random_complex

PROJ = young_projectors()


def test_identity_block():
    np.testing.assert_array_equal(ordering_block(np.eye(3)), np.eye(6))


def test_diagonal_block():
    a, b, c = np.exp(0.3j), np.exp(-1.1j), np.exp(0.8j)
    m = ordering_block(np.diag([a, b, c]))
    np.testing.assert_allclose(m, a * b * c * np.eye(6), atol=1e-15)


@given(a=matrices3)
def test_block_is_compression_of_triple_tensor(a):
    np.testing.assert_allclose(ordering_block(a), zero_weight_block(a), atol=1e-12)


def monomial(rng):
    perm = np.eye(3)[rng.permutation(3)]
    return np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 3))) @ perm


def test_homomorphism_on_monomial_matrices(rng):
    for _ in range(20):
        g = monomial(rng)
        r = build_su3(rng.uniform(0, 2 * np.pi, 8))
        np.testing.assert_allclose(ordering_block(g @ r), ordering_block(g) @ ordering_block(r), atol=1e-13)
        np.testing.assert_allclose(ordering_block(r @ g), ordering_block(r) @ ordering_block(g), atol=1e-13)


def test_generic_product_leaves_the_subspace(rng):
    # R x R x R maps one-photon-per-port states onto bunched ones, so the
    # compression is not multiplicative for generic pairs.
    r1 = build_su3(rng.uniform(0, 2 * np.pi, 8))
    r2 = build_su3(rng.uniform(0, 2 * np.pi, 8))
    gap = np.abs(ordering_block(r1 @ r2) - ordering_block(r1) @ ordering_block(r2)).max()
    assert gap > 1e-3
    full = lambda r: np.kron(np.kron(r, r), r)  # noqa: E731
    np.testing.assert_allclose(full(r1 @ r2), full(r1) @ full(r2), atol=1e-13)


def test_projector_algebra():
    ps = [p for _, p in PROJ.items()]
    for i, p in enumerate(ps):
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
        np.testing.assert_allclose(p, p.conj().T, atol=1e-12)
        for j, q in enumerate(ps):
            if i != j:
                np.testing.assert_allclose(p @ q, 0, atol=1e-12)
    np.testing.assert_allclose(sum(ps), np.eye(6), atol=1e-12)
    assert [np.linalg.matrix_rank(p) for p in ps] == [1, 4, 1]
    assert [round(np.trace(p).real, 12) for p in ps] == [1, 4, 1]


def test_projectors_on_identity_ordering():
    e = np.zeros(6)
    e[0] = 1
    np.testing.assert_allclose(PROJ.p_sym @ e, np.full(6, 1 / 6), atol=1e-15)
    signs = np.array([p.sign for p in S3_PERMUTATIONS])
    np.testing.assert_allclose(PROJ.p_anti @ e, signs / 6, atol=1e-15)


def test_relabeling_is_a_representation():
    for p in S3_PERMUTATIONS:
        for q in S3_PERMUTATIONS:
            np.testing.assert_array_equal(
                frequency_relabeling(p.compose(q)), frequency_relabeling(p) @ frequency_relabeling(q)
            )


@given(a=matrices3, p=st.sampled_from(S3_PERMUTATIONS))
def test_block_commutes_with_relabeling(a, p):
    m = ordering_block(a)
    q = frequency_relabeling(p)
    np.testing.assert_allclose(q @ m, m @ q, atol=1e-12)


@given(o=omegas)
def test_projectors_commute_with_block(o):
    m = ordering_block(build_su3(o))
    for _, p in PROJ.items():
        np.testing.assert_allclose(p @ m, m @ p, atol=1e-12)


def test_traces_identity():
    t = isotypic_traces(ordering_block(np.eye(3)))
    assert t == pytest.approx((1, 4, 1), abs=1e-14)


def test_traces_omega_b():
    r = build_su3(OMEGA_B)
    t = isotypic_traces(ordering_block(r))
    assert t[0] == pytest.approx(-1 / (4 * math.sqrt(2)), abs=1e-12)
    assert t[1] == pytest.approx(2 * immanant(r), abs=1e-12)
    assert t[2] == pytest.approx(1, abs=1e-12)


def test_trace_contracts_random(rng):
    for i in range(200):
        a = build_su3(rng.uniform(0, 2 * np.pi, 8)) if i % 2 else random_complex(rng)
        t = isotypic_traces(ordering_block(a))
        for got, ref in zip(t, (permanent(a), 2 * immanant(a), determinant(a))):
            assert abs(got - ref) <= 1e-10 * abs(ref)


def test_input_norms():
    n_sym, n_mixed, n_anti = input_norms()
    assert n_sym == pytest.approx(1 / 6, abs=1e-14)
    assert n_anti == pytest.approx(1 / 6, abs=1e-14)
    # (1/2)^2 + (1/sqrt 12)^2 + (1/sqrt 12)^2 + (1/2)^2
    assert n_mixed == pytest.approx(0.25 + 1 / 12 + 1 / 12 + 0.25, abs=1e-14)
    assert n_sym + n_mixed + n_anti == pytest.approx(1, abs=1e-14)
