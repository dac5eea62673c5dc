"""Unit tests for SU(d) generators and the generator expansion."""

import math

import numpy as np
import pytest

from concurrence.exceptions import DimensionMismatch
from concurrence.gellmann import (
    BlochExpansion,
    bloch_expansion,
    bloch_norm,
    identity_prefactor,
    local_prefactor,
    reconstruct_density,
    reduced_density_from_bloch,
    su_generators,
)
from concurrence.sampling import SeededSampler, random_pure_state
from concurrence.states import make_state, maximally_entangled_state, product_state

GELL_MANN = [
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.diag([1.0, 1.0, -2.0]).astype(complex) / np.sqrt(3.0),
]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_generator_algebra(d):
    gens = su_generators(d)
    assert len(gens) == d * d - 1
    assert gens.trace_residual() < 1e-12
    assert gens.orthogonality_residual() < 1e-12
    assert gens.hermiticity_residual() == 0.0


def test_qutrit_generators_are_gell_mann_matrices():
    for ours, expected in zip(su_generators(3).lambdas, GELL_MANN):
        np.testing.assert_array_equal(ours, expected)


def test_qubit_generators_are_pauli_matrices():
    x, y, z = su_generators(2).lambdas
    np.testing.assert_array_equal(x, [[0, 1], [1, 0]])
    np.testing.assert_array_equal(y, [[0, -1j], [1j, 0]])
    np.testing.assert_array_equal(z, [[1, 0], [0, -1]])


def test_generators_rejects_small_dimension():
    with pytest.raises(DimensionMismatch):
        su_generators(1)


def test_prefactors():
    assert local_prefactor(3) == pytest.approx(math.sqrt(3.0) / 2.0)
    assert local_prefactor(2) == pytest.approx(1.0)
    assert identity_prefactor(3) == pytest.approx(math.sqrt(3.0))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_product_state_has_unit_vectors(d):
    rng = np.random.default_rng(d)
    a = rng.normal(size=d) + 1j * rng.normal(size=d)
    b = rng.normal(size=d) + 1j * rng.normal(size=d)
    u, v = bloch_norm(bloch_expansion(product_state(a, b)))
    assert u == pytest.approx(1.0, abs=1e-12)
    assert v == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_maximally_entangled_state_has_zero_vectors(d):
    e = bloch_expansion(maximally_entangled_state(d))
    assert np.max(np.abs(e.u)) < 1e-14
    assert np.max(np.abs(e.v)) < 1e-14


def test_local_vectors_have_equal_norm():
    sampler = SeededSampler(5)
    for _ in range(50):
        u, v = bloch_norm(bloch_expansion(random_pure_state(sampler, 3)))
        assert abs(u - v) < 1e-12


@pytest.mark.parametrize("d", [2, 3, 4])
def test_reconstruction_roundtrip(d):
    sampler = SeededSampler(17)
    for _ in range(10):
        s = random_pure_state(sampler, d)
        e = bloch_expansion(s)
        np.testing.assert_allclose(reconstruct_density(e, d), s.projector(), atol=1e-12)


def test_reduced_density_from_bloch_vector():
    sampler = SeededSampler(23)
    s = random_pure_state(sampler, 3)
    rho = reduced_density_from_bloch(bloch_expansion(s).u, 3)
    np.testing.assert_allclose(rho, s.alpha @ s.alpha.conj().T, atol=1e-12)


def test_subsystem_b_vector_is_physical():
    # |0> (x) |1>: subsystem B sits in |1>, so v points along -lambda_3
    s = make_state(2, [[0.0, 1.0], [0.0, 0.0]])
    e = bloch_expansion(s)
    np.testing.assert_allclose(e.u, [0.0, 0.0, 1.0], atol=1e-15)
    np.testing.assert_allclose(e.v, [0.0, 0.0, -1.0], atol=1e-15)


def test_length_checks():
    e = BlochExpansion(d=3, u=np.zeros(3), v=np.zeros(8), beta=np.zeros((8, 8)))
    with pytest.raises(DimensionMismatch):
        reconstruct_density(e, 3)
    with pytest.raises(DimensionMismatch):
        reduced_density_from_bloch(np.zeros(3), 3)
