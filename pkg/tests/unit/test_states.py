"""Unit tests for pure states, reduced densities and Schmidt spectra."""

import math
import unittest

import numpy as np
import pytest

from concurrence.exceptions import (
    ConstraintViolation,
    DimensionMismatch,
    NotNormalized,
    NotUnitary,
    OutOfRange,
    ZeroState,
)
from concurrence.states import (
    SchmidtSpectrum,
    apply_local_unitary,
    epsilon_coefficients,
    epsilon_state,
    fu_family_state,
    make_state,
    maximally_entangled_state,
    product_state,
    reduced_density,
    schmidt_form_state,
    schmidt_spectrum,
)
from concurrence.utils.constants import Side


class TestMakeState(unittest.TestCase):
    """Construction and validation of pure states."""

    def test_small_norm_error_is_renormalized(self):
        s = make_state(3, np.eye(3) / math.sqrt(3.0) * (1.0 + 5e-7))
        self.assertAlmostEqual(float(np.sum(np.abs(s.alpha) ** 2)), 1.0, places=14)

    def test_large_norm_error_raises(self):
        with self.assertRaises(NotNormalized) as ctx:
            make_state(2, [[0.5, 0.0], [0.0, 0.0]])
        self.assertIn("normalization", str(ctx.exception))

    def test_zero_state_raises(self):
        with self.assertRaises(ZeroState):
            make_state(3, np.zeros((3, 3)))

    def test_shape_mismatch_raises(self):
        with self.assertRaises(DimensionMismatch):
            make_state(3, np.eye(2) / math.sqrt(2.0))

    def test_dimension_out_of_range_raises(self):
        with self.assertRaises(DimensionMismatch):
            make_state(1, [[1.0]])

    def test_amplitudes_are_read_only(self):
        s = maximally_entangled_state(3)
        with self.assertRaises(ValueError):
            s.alpha[0, 0] = 1.0

    def test_ket_and_projector(self):
        s = maximally_entangled_state(2)
        self.assertEqual(s.ket.shape, (4,))
        p = s.projector()
        np.testing.assert_allclose(p @ p, p, atol=1e-15)
        self.assertAlmostEqual(float(np.trace(p).real), 1.0, places=15)


class TestReducedDensity(unittest.TestCase):
    """Partial traces of random states."""

    def setUp(self):
        rng = np.random.default_rng(11)
        z = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        self.state = make_state(3, z / np.linalg.norm(z))

    def test_sides(self):
        a = self.state.alpha
        np.testing.assert_allclose(reduced_density(self.state, Side.A).rho, a @ a.conj().T)
        np.testing.assert_allclose(reduced_density(self.state, "B").rho, a.conj().T @ a)

    def test_spectra_agree(self):
        wa = reduced_density(self.state, Side.A).eigenvalues()
        wb = reduced_density(self.state, Side.B).eigenvalues()
        np.testing.assert_allclose(wa, wb, atol=1e-12)
        self.assertAlmostEqual(float(wa.sum()), 1.0, places=12)

    def test_schmidt_spectrum_descending(self):
        kappa = schmidt_spectrum(self.state).kappa
        self.assertEqual(list(kappa), sorted(kappa, reverse=True))
        self.assertAlmostEqual(math.fsum(k * k for k in kappa), 1.0, places=12)


def test_schmidt_form_state_roundtrip():
    s = schmidt_form_state([0.8, 0.6, 0.0])
    assert schmidt_spectrum(s).kappa == pytest.approx((0.8, 0.6, 0.0), abs=1e-12)


def test_schmidt_spectrum_validation():
    with pytest.raises(OutOfRange):
        SchmidtSpectrum((0.6, 0.8))
    with pytest.raises(OutOfRange):
        SchmidtSpectrum((1.0, -0.0001))
    with pytest.raises(NotNormalized):
        SchmidtSpectrum((0.5, 0.5))
    assert SchmidtSpectrum.from_squares([0.25, 0.75]).kappa == pytest.approx((math.sqrt(0.75), 0.5))


def test_product_state_is_outer_product():
    s = product_state([1.0, 1.0j, 0.0], [0.0, 2.0, 0.0])
    expected = np.outer(np.array([1.0, 1.0j, 0.0]) / math.sqrt(2.0), [0.0, 1.0, 0.0])
    np.testing.assert_allclose(s.alpha, expected, atol=1e-15)


def test_product_state_rejects_zero_ket():
    with pytest.raises(ZeroState):
        product_state([0.0, 0.0], [1.0, 0.0])
    with pytest.raises(DimensionMismatch):
        product_state([1.0, 0.0], [1.0, 0.0, 0.0])


def test_family_state_and_constraint():
    s = fu_family_state(1.0, 1.0, 1.0)
    np.testing.assert_allclose(s.alpha, np.eye(3) / math.sqrt(3.0), atol=1e-15)
    with pytest.raises(ConstraintViolation):
        fu_family_state(1.0, 1.0, 0.0)


def test_epsilon_coefficients():
    assert epsilon_coefficients(0.0) == pytest.approx((0.0, 0.0, math.sqrt(3.0)))
    assert epsilon_coefficients(2.0 / 3.0) == pytest.approx((1.0, 1.0, 1.0))
    assert epsilon_coefficients(1.0) == pytest.approx((math.sqrt(1.5), math.sqrt(1.5), 0.0))
    with pytest.raises(OutOfRange):
        epsilon_coefficients(1.5)
    assert epsilon_state(0.0).alpha[2, 2] == pytest.approx(1.0)


def test_local_unitary_application():
    s = maximally_entangled_state(2)
    x = np.array([[0.0, 1.0], [1.0, 0.0]])
    rotated = apply_local_unitary(s, x, np.eye(2))
    np.testing.assert_allclose(rotated.alpha, x @ s.alpha, atol=1e-15)


def test_local_unitary_rejects_non_unitary():
    s = maximally_entangled_state(2)
    with pytest.raises(NotUnitary):
        apply_local_unitary(s, 2.0 * np.eye(2), np.eye(2))
    with pytest.raises(DimensionMismatch):
        apply_local_unitary(s, np.eye(3), np.eye(2))
