"""Pure bipartite states, reduced density matrices and Schmidt spectra.

A state of two d-level systems is held as its d x d amplitude matrix
``alpha`` with ``|psi> = sum_ij alpha[i, j] |i, j>``. Values are immutable:
the stored arrays are marked read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np
import numpy.typing as npt

from concurrence.exceptions import (
    ConstraintViolation,
    DimensionMismatch,
    LengthMismatch,
    NotHermitian,
    NotNormalized,
    NotUnitary,
    OutOfRange,
    ZeroState,
)
from concurrence.linalg import (
    ComplexMatrix,
    as_complex_matrix,
    clamp_spectrum,
    hermitian_eigenvalues,
    hermiticity_residual,
    unitarity_residual,
)
from concurrence.logging import get_logger
from concurrence.utils.constants import (
    FAMILY_CONSTRAINT_TOLERANCE,
    HERMITICITY_TOLERANCE,
    MAX_DIMENSION,
    NORM_TOLERANCE,
    ROUNDING_SLACK,
    STATE_TOLERANCE,
    UNITARITY_TOLERANCE,
    Side,
)

logger = get_logger(__name__)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class PureBipartiteState:
    """Pure state of two d-level systems.

    Use :func:`make_state` to build one from raw amplitudes; the constructor
    only checks the stored invariants.
    """

    d: int
    alpha: ComplexMatrix

    def __post_init__(self) -> None:
        if self.alpha.shape != (self.d, self.d):
            raise DimensionMismatch(f"alpha must be {self.d}x{self.d}, got {self.alpha.shape}")
        norm_sq = float(np.sum(np.abs(self.alpha) ** 2))
        if abs(norm_sq - 1.0) > STATE_TOLERANCE:
            raise NotNormalized(f"sum |alpha_ij|^2 = {norm_sq!r} is not 1")

    @property
    def ket(self) -> npt.NDArray[np.complex128]:
        """State vector in the ``|i, j>`` basis, index ``i * d + j``."""
        return self.alpha.reshape(self.d * self.d)

    def projector(self) -> ComplexMatrix:
        """``|psi><psi|`` as a d^2 x d^2 matrix."""
        psi = self.ket
        return np.outer(psi, psi.conj())


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace d x d matrix (a reduced state)."""

    d: int
    rho: ComplexMatrix

    def __post_init__(self) -> None:
        if self.rho.shape != (self.d, self.d):
            raise DimensionMismatch(f"rho must be {self.d}x{self.d}, got {self.rho.shape}")
        residual = hermiticity_residual(self.rho)
        if residual > HERMITICITY_TOLERANCE:
            raise NotHermitian(f"density matrix is not Hermitian ({residual:.3e})")
        trace = complex(np.trace(self.rho))
        if abs(trace - 1.0) > STATE_TOLERANCE:
            raise NotNormalized(f"density matrix trace {trace} is not 1")

    def eigenvalues(self) -> npt.NDArray[np.float64]:
        """Ascending eigenvalues clamped into [0, 1]."""
        return clamp_spectrum(hermitian_eigenvalues(self.rho))


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Schmidt coefficients ``kappa_1 >= ... >= kappa_d >= 0`` with unit square sum."""

    kappa: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.kappa) < 1:
            raise LengthMismatch("Schmidt spectrum is empty")
        if any(k < 0.0 for k in self.kappa):
            raise OutOfRange(f"Schmidt coefficients must be nonnegative: {self.kappa}")
        if any(a < b for a, b in zip(self.kappa, self.kappa[1:])):
            raise OutOfRange(f"Schmidt coefficients must be descending: {self.kappa}")
        total = math.fsum(k * k for k in self.kappa)
        if abs(total - 1.0) > STATE_TOLERANCE:
            raise NotNormalized(f"sum kappa_i^2 = {total!r} is not 1")

    @classmethod
    def from_squares(cls, squares: Any) -> "SchmidtSpectrum":
        """Build from eigenvalues of a reduced density matrix (any order)."""
        w = clamp_spectrum(squares)
        return cls(tuple(sorted((math.sqrt(x) for x in w), reverse=True)))

    @property
    def d(self) -> int:
        return len(self.kappa)

    @property
    def squares(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.kappa, dtype=np.float64) ** 2


def make_state(d: int, alpha: Any) -> PureBipartiteState:
    """Build a validated, exactly normalized state.

    Args:
        d: Local dimension (both subsystems).
        alpha: d x d amplitudes, ``alpha[i][j]`` for ``|i, j>``.

    Returns:
        The state with amplitudes rescaled to unit 2-norm.

    Raises:
        DimensionMismatch: If alpha is not d x d or d is out of range.
        ZeroState: If every amplitude vanishes.
        NotNormalized: If the norm is off by more than the renormalization tolerance.
    """
    if not 2 <= d <= MAX_DIMENSION:
        raise DimensionMismatch(f"local dimension must be in [2, {MAX_DIMENSION}], got {d}")
    a = as_complex_matrix(alpha)
    if a.shape != (d, d):
        raise DimensionMismatch(f"alpha must be {d}x{d}, got {a.shape[0]}x{a.shape[1]}")

    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        raise ZeroState("all amplitudes vanish")
    if abs(norm - 1.0) - NORM_TOLERANCE > ROUNDING_SLACK:
        raise NotNormalized(
            f"normalization invariant sum |alpha_ij|^2 = 1 violated: "
            f"norm {norm:.9g} deviates by more than {NORM_TOLERANCE:g}"
        )
    if norm != 1.0:
        logger.debug("Renormalizing d=%d state with norm %.15g", d, norm)
    return PureBipartiteState(d=d, alpha=_frozen(a / norm))


def reduced_density(s: PureBipartiteState, side: Side | str = Side.A) -> DensityMatrix:
    """Reduced state: ``alpha alpha^dagger`` for A, ``alpha^dagger alpha`` for B."""
    side = Side(side)
    a = s.alpha
    rho = a @ a.conj().T if side is Side.A else a.conj().T @ a
    return DensityMatrix(d=s.d, rho=_frozen(rho))


def schmidt_spectrum(s: PureBipartiteState) -> SchmidtSpectrum:
    """Schmidt coefficients from the eigenvalues of ``rho_A``, descending."""
    return SchmidtSpectrum.from_squares(reduced_density(s, Side.A).eigenvalues())


def maximally_entangled_state(d: int) -> PureBipartiteState:
    """``(1/sqrt(d)) sum_i |i, i>``."""
    return make_state(d, np.eye(d) / math.sqrt(d))


def product_state(a: Sequence[complex], b: Sequence[complex]) -> PureBipartiteState:
    """``|a> (x) |b>`` for two local kets of equal length (normalized here)."""
    ka = np.asarray(a, dtype=np.complex128)
    kb = np.asarray(b, dtype=np.complex128)
    if ka.shape != kb.shape or ka.ndim != 1:
        raise DimensionMismatch(f"local kets must be 1-D of equal length: {ka.shape}, {kb.shape}")
    na, nb = np.linalg.norm(ka), np.linalg.norm(kb)
    if na == 0.0 or nb == 0.0:
        raise ZeroState("local ket vanishes")
    return make_state(ka.size, np.outer(ka / na, kb / nb))


def schmidt_form_state(kappa: Sequence[float]) -> PureBipartiteState:
    """``sum_i kappa_i |i, i>``: the Schmidt form in the computational basis."""
    k = np.asarray(kappa, dtype=np.float64)
    return make_state(k.size, np.diag(k))


def fu_family_state(a1: float, a2: float, a3: float) -> PureBipartiteState:
    """``(1/sqrt(3))(a1|1,1> + a2|2,2> + a3|3,3>)`` with ``a1^2 + a2^2 + a3^2 = 3``.

    Raises:
        ConstraintViolation: If the sum-of-squares constraint fails.
    """
    check_family_constraint(a1, a2, a3)
    return make_state(3, np.diag([a1, a2, a3]) / math.sqrt(3.0))


def check_family_constraint(a1: float, a2: float, a3: float) -> None:
    """Raise :class:`ConstraintViolation` unless ``a1^2 + a2^2 + a3^2 = 3``."""
    total = a1 * a1 + a2 * a2 + a3 * a3
    if abs(total - 3.0) > FAMILY_CONSTRAINT_TOLERANCE:
        raise ConstraintViolation(f"a1^2 + a2^2 + a3^2 = {total!r}, expected 3")


def epsilon_coefficients(eps: float) -> tuple[float, float, float]:
    """``a1 = a2 = sqrt(3 eps / 2)``, ``a3 = sqrt(3 (1 - eps))``."""
    if not 0.0 <= eps <= 1.0:
        raise OutOfRange(f"epsilon must lie in [0, 1], got {eps!r}")
    a12 = math.sqrt(1.5 * eps)
    return a12, a12, math.sqrt(3.0 * (1.0 - eps))


def epsilon_state(eps: float) -> PureBipartiteState:
    """One-parameter slice of the diagonal qutrit family with ``a1 = a2``."""
    return fu_family_state(*epsilon_coefficients(eps))


def apply_local_unitary(s: PureBipartiteState, ua: Any, ub: Any) -> PureBipartiteState:
    """Amplitudes of ``(U_A (x) U_B)|psi>``, i.e. ``U_A alpha U_B^T``.

    Raises:
        NotUnitary: If either matrix fails ``U^dagger U = 1``.
        DimensionMismatch: If a unitary is not d x d.
    """
    mats = []
    for label, u in (("U_A", ua), ("U_B", ub)):
        m = as_complex_matrix(u)
        if m.shape != (s.d, s.d):
            raise DimensionMismatch(f"{label} must be {s.d}x{s.d}, got {m.shape}")
        residual = unitarity_residual(m)
        if residual > UNITARITY_TOLERANCE:
            raise NotUnitary(f"{label} is not unitary (max|U^dagger U - 1| = {residual:.3e})")
        mats.append(m)
    u_a, u_b = mats
    return make_state(s.d, u_a @ s.alpha @ u_b.T)
