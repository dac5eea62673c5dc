"""Small dense complex linear algebra.

Hermitian eigenvalues, determinants and a real-root cubic solver for the
d x d matrices that appear in bipartite entanglement calculations. Matrices
are plain ``numpy`` arrays of ``complex128``.

Eigenvalues use closed forms for d = 2 and d = 3 (the latter through
:func:`solve_monic_cubic_real` plus a deflation to a 2x2 block) and cyclic
complex Jacobi rotations for larger matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from concurrence.exceptions import (
    ComplexRoots,
    DimensionMismatch,
    NotHermitian,
    NotPositive,
    NotSquare,
)
from concurrence.logging import get_logger
from concurrence.utils.constants import (
    CUBIC_DISCRIMINANT_TOLERANCE,
    EIGENVALUE_CLAMP_TOLERANCE,
    HERMITICITY_TOLERANCE,
    JACOBI_MAX_SWEEPS,
    JACOBI_TOLERANCE,
)

logger = get_logger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class CubicCoefficients:
    """Coefficients of the monic cubic ``x^3 + c2 x^2 + c1 x + c0 = 0``."""

    c2: float
    c1: float
    c0: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(c) for c in (self.c2, self.c1, self.c0)):
            raise ValueError(f"cubic coefficients must be finite: {self}")

    def evaluate(self, x: float) -> float:
        """Evaluate the cubic at ``x``."""
        return ((x + self.c2) * x + self.c1) * x + self.c0


def as_complex_matrix(m: Any) -> ComplexMatrix:
    """Coerce nested sequences or arrays to a 2-D complex matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionMismatch(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    return a


def adjoint(m: Any) -> ComplexMatrix:
    """Conjugate transpose."""
    return as_complex_matrix(m).conj().T


def _require_square(a: ComplexMatrix) -> None:
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"matrix must be square, got {a.shape[0]}x{a.shape[1]}")


def hermiticity_residual(m: Any) -> float:
    """Max-norm of ``M - M^dagger``."""
    a = as_complex_matrix(m)
    _require_square(a)
    return float(np.max(np.abs(a - a.conj().T)))


def unitarity_residual(u: Any) -> float:
    """Max-norm of ``U^dagger U - 1``."""
    a = as_complex_matrix(u)
    _require_square(a)
    return float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))


def determinant(m: Any) -> complex:
    """Determinant of a square matrix (LU factorization)."""
    a = as_complex_matrix(m)
    _require_square(a)
    return complex(np.linalg.det(a))


def solve_monic_cubic_real(c: CubicCoefficients) -> tuple[float, float, float]:
    """Three real roots of a monic cubic, descending.

    Uses the trigonometric form of the depressed cubic ``t^3 + p t + q = 0``
    with ``x = t - c2/3``. Multiple roots come back as numerically equal
    values.

    Raises:
        ComplexRoots: If the discriminant indicates a conjugate pair.
    """
    shift = c.c2 / 3.0
    p = c.c1 - c.c2 * c.c2 / 3.0
    q = 2.0 * c.c2**3 / 27.0 - c.c2 * c.c1 / 3.0 + c.c0

    # 4p^3 + 27q^2 > 0 means one real root and a complex pair
    disc = 4.0 * p**3 + 27.0 * q**2
    if disc > CUBIC_DISCRIMINANT_TOLERANCE:
        raise ComplexRoots(f"cubic {c} has complex roots (discriminant {disc:.3e})")

    if p >= 0.0:
        # p ~ 0 and q ~ 0: triple root
        t = float(np.cbrt(-q))
        roots = [t, t, t]
    else:
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
        phi = math.acos(min(1.0, max(-1.0, arg))) / 3.0
        roots = [m * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3)]

    r1, r2, r3 = sorted((t - shift for t in roots), reverse=True)
    return r1, r2, r3


def _eigvalsh_2x2(a: ComplexMatrix) -> list[float]:
    mean = 0.5 * (a[0, 0].real + a[1, 1].real)
    half_gap = math.hypot(0.5 * (a[0, 0].real - a[1, 1].real), abs(a[0, 1]))
    return [mean - half_gap, mean + half_gap]


def _isolated_eigenvector(b: ComplexMatrix) -> ComplexMatrix:
    # B = M - r I has rank two for a simple root r; the null vector is the
    # largest cross product of two rows
    candidates = [np.cross(b[0], b[1]), np.cross(b[0], b[2]), np.cross(b[1], b[2])]
    v = max(candidates, key=lambda x: float(np.linalg.norm(x)))
    return v / np.linalg.norm(v)


def _eigvalsh_3x3(a: ComplexMatrix) -> list[float]:
    # A = mu 1 + theta M with Tr M = 0 and Tr M^2 = 2, so the eigenvalues of M
    # solve x^3 - x - det M = 0
    mu = float(np.trace(a).real) / 3.0
    b = a - mu * np.eye(3)
    theta = math.sqrt(float(np.sum(np.abs(b) ** 2)) / 2.0)
    if theta == 0.0:
        return [mu, mu, mu]
    m = b / theta
    det_m = determinant(m).real
    r1, r2, r3 = solve_monic_cubic_real(CubicCoefficients(0.0, -1.0, -det_m))

    # Only the root farthest from the other two is accurate in the
    # trigonometric form; the remaining pair comes from the 2x2 block of M on
    # the orthogonal complement of its eigenvector.
    isolated = r1 if r1 - r2 >= r2 - r3 else r3
    v = _isolated_eigenvector(m - isolated * np.eye(3))
    smallest = np.argsort(np.abs(v))[:2]
    basis = np.column_stack([v, np.eye(3)[:, smallest[0]], np.eye(3)[:, smallest[1]]])
    q, _ = np.linalg.qr(basis)
    w = q[:, 1:]
    block = w.conj().T @ m @ w
    pair = _eigvalsh_2x2(0.5 * (block + block.conj().T))
    rayleigh = float(np.vdot(v, m @ v).real)
    return sorted(mu + theta * x for x in (rayleigh, *pair))


def _eigvalsh_jacobi(a: ComplexMatrix) -> list[float]:
    a = a.copy()
    n = a.shape[0]
    scale = float(np.linalg.norm(a)) or 1.0
    off_mask = ~np.eye(n, dtype=bool)

    for sweep in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(float(np.sum(np.abs(a[off_mask]) ** 2)))
        if off <= JACOBI_TOLERANCE * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(a[p, q])
                if r == 0.0:
                    continue
                phase = a[p, q] / r
                # Phase rotation makes the (p, q) block real symmetric,
                # then a real Givens rotation annihilates it
                theta = 0.5 * math.atan2(2.0 * r, a[q, q].real - a[p, p].real)
                cos_t, sin_t = math.cos(theta), math.sin(theta)
                u = np.eye(n, dtype=np.complex128)
                u[p, p] = cos_t
                u[p, q] = sin_t
                u[q, p] = -sin_t * phase.conjugate()
                u[q, q] = cos_t * phase.conjugate()
                a = u.conj().T @ a @ u
    else:
        logger.warning("Jacobi iteration did not converge in %d sweeps", JACOBI_MAX_SWEEPS)

    logger.debug("Jacobi converged after %d sweeps (n=%d)", sweep, n)
    return sorted(float(x) for x in np.diag(a).real)


def hermitian_eigenvalues(m: Any) -> list[float]:
    """Eigenvalues of a Hermitian matrix, ascending.

    Accuracy is absolute: each eigenvalue is within a small multiple of
    machine epsilon times ``||M||_F``, also at repeated eigenvalues. Eigenvalues
    much smaller than the norm carry no relative accuracy guarantee.

    Args:
        m: Square Hermitian matrix.

    Returns:
        ``rows`` real eigenvalues in ascending order.

    Raises:
        NotSquare: For non-square input.
        NotHermitian: If ``max|M - M^dagger|`` exceeds the tolerance.
    """
    a = as_complex_matrix(m)
    _require_square(a)
    residual = hermiticity_residual(a)
    if residual > HERMITICITY_TOLERANCE:
        raise NotHermitian(f"matrix is not Hermitian (max|M - M^dagger| = {residual:.3e})")

    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]

    if n == 1 or not np.any(a[~np.eye(n, dtype=bool)]):
        return sorted(float(x) for x in np.diag(a).real)
    if n == 2:
        return _eigvalsh_2x2(a)
    if n == 3:
        return _eigvalsh_3x3(a)
    return _eigvalsh_jacobi(a)


def clamp_spectrum(values: Any) -> npt.NDArray[np.float64]:
    """Clamp density-matrix eigenvalues into ``[0, 1]``.

    Raises:
        NotPositive: If an eigenvalue is below ``-EIGENVALUE_CLAMP_TOLERANCE``.
    """
    w = np.asarray(values, dtype=np.float64)
    if w.size and w.min() < -EIGENVALUE_CLAMP_TOLERANCE:
        raise NotPositive(f"eigenvalue {w.min():.3e} is negative beyond tolerance")
    return np.clip(w, 0.0, 1.0)
