"""SU(d) generators and the generator expansion of a pure two-party state.

For d = 3 the generators are the eight Gell-Mann matrices in their usual
order. For other d the generalized set is ordered as all symmetric pairs
(row, col) lexicographically, then all antisymmetric pairs, then the
diagonal generators by increasing rank; for d = 2 this gives the Pauli
matrices.

Normalization of the expansion
------------------------------
With ``r_i = Tr(rho_A lambda_i)`` any reduced state reads
``rho_A = 1/d + (1/2) sum_i r_i lambda_i``. A pure reduced state has
``|r|^2 = 2(d - 1)/d``, so ``u = c_d r`` with ``c_d = sqrt(d / (2(d - 1)))``
has unit length exactly for product states. At d = 3, ``c_3 = sqrt(3)/2``;
at d = 2 ``u`` is the ordinary Bloch vector. The correlation tensor uses
``beta_ij = (d/2) Tr(rho_AB lambda_i (x) lambda_j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
import numpy.typing as npt

from concurrence.exceptions import DimensionMismatch
from concurrence.linalg import ComplexMatrix
from concurrence.states import PureBipartiteState

# Position of each Gell-Mann matrix lambda_1..lambda_8 in the grouped d = 3 ordering
_GELL_MANN_ORDER = (0, 3, 6, 1, 4, 2, 5, 7)


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Traceless Hermitian generators with ``Tr(l_a l_b) = 2 delta_ab``."""

    d: int
    lambdas: tuple[ComplexMatrix, ...]

    def __len__(self) -> int:
        return len(self.lambdas)

    def orthogonality_residual(self) -> float:
        """``max |Tr(l_a l_b) - 2 delta_ab|`` over all pairs."""
        stack = np.stack(self.lambdas)
        gram = np.einsum("aij,bji->ab", stack, stack)
        return float(np.max(np.abs(gram - 2.0 * np.eye(len(self.lambdas)))))

    def trace_residual(self) -> float:
        """``max |Tr(l_a)|``."""
        return float(max(abs(np.trace(m)) for m in self.lambdas))

    def hermiticity_residual(self) -> float:
        return float(max(np.max(np.abs(m - m.conj().T)) for m in self.lambdas))


@dataclass(frozen=True, eq=False)
class BlochExpansion:
    """Local vectors ``u``, ``v`` and correlation matrix ``beta`` of a pure state."""

    d: int
    u: npt.NDArray[np.float64]
    v: npt.NDArray[np.float64]
    beta: npt.NDArray[np.float64]


def local_prefactor(d: int) -> float:
    """``c_d``: scales ``Tr(rho_A lambda_i)`` to ``u_i``."""
    return math.sqrt(d / (2.0 * (d - 1)))


def identity_prefactor(d: int) -> float:
    """``g_d = sqrt(d(d-1)/2)``, the weight of ``lambda . u`` in the expansion (sqrt(3) at d = 3)."""
    return math.sqrt(d * (d - 1) / 2.0)


@lru_cache(maxsize=None)
def su_generators(d: int) -> GeneratorSet:
    """Generalized Gell-Mann matrices of SU(d).

    Raises:
        DimensionMismatch: For d < 2.
    """
    if d < 2:
        raise DimensionMismatch(f"SU(d) generators need d >= 2, got {d}")

    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    symmetric, antisymmetric, diagonal = [], [], []
    for j, k in pairs:
        s = np.zeros((d, d), dtype=np.complex128)
        s[j, k] = s[k, j] = 1.0
        symmetric.append(s)
        a = np.zeros((d, d), dtype=np.complex128)
        a[j, k] = -1j
        a[k, j] = 1j
        antisymmetric.append(a)
    for rank in range(1, d):
        diag = np.zeros(d)
        diag[:rank] = 1.0
        diag[rank] = -float(rank)
        diagonal.append(np.diag(diag / math.sqrt(rank * (rank + 1) / 2.0)).astype(np.complex128))

    lambdas = symmetric + antisymmetric + diagonal
    if d == 3:
        lambdas = [lambdas[i] for i in _GELL_MANN_ORDER]
    for m in lambdas:
        m.setflags(write=False)
    return GeneratorSet(d=d, lambdas=tuple(lambdas))


def _correlations(alpha: ComplexMatrix, stack: ComplexMatrix) -> npt.NDArray[np.complex128]:
    # <psi| A (x) B |psi> = sum conj(alpha_ij) A_ik B_jl alpha_kl
    return np.einsum("ij,aik,kl,bjl->ab", alpha.conj(), stack, alpha, stack, optimize=True)


def bloch_expansion(s: PureBipartiteState) -> BlochExpansion:
    """Generator expansion coefficients of ``|psi><psi|``."""
    d = s.d
    gens = su_generators(d).lambdas
    c = local_prefactor(d)
    alpha = s.alpha
    rho_a = alpha @ alpha.conj().T
    # rho_B of the physical partial trace is (alpha^dagger alpha)^T
    rho_b = (alpha.conj().T @ alpha).T

    u = np.array([c * np.trace(rho_a @ m).real for m in gens])
    v = np.array([c * np.trace(rho_b @ m).real for m in gens])
    beta = 0.5 * d * _correlations(alpha, np.stack(gens)).real
    return BlochExpansion(d=d, u=u, v=v, beta=beta)


def bloch_norm(e: BlochExpansion) -> tuple[float, float]:
    """``(|u|, |v|)``."""
    return float(np.linalg.norm(e.u)), float(np.linalg.norm(e.v))


def _lambda_dot(vec: npt.NDArray[np.float64], gens: tuple[ComplexMatrix, ...]) -> ComplexMatrix:
    return np.tensordot(vec, np.stack(gens), axes=1)


def _check_lengths(e: BlochExpansion, d: int) -> None:
    n = d * d - 1
    if e.u.shape != (n,) or e.v.shape != (n,) or e.beta.shape != (n, n):
        raise DimensionMismatch(
            f"expansion shapes u{e.u.shape} v{e.v.shape} beta{e.beta.shape} "
            f"do not match d={d} (expected {n} generators)"
        )


def reconstruct_density(e: BlochExpansion, d: int) -> ComplexMatrix:
    """Rebuild the d^2 x d^2 two-party density matrix from its expansion."""
    _check_lengths(e, d)
    gens = su_generators(d).lambdas
    g = identity_prefactor(d)
    eye = np.eye(d, dtype=np.complex128)
    stack = np.stack(gens)

    correlations = np.einsum("ij,iab,jcd->acbd", e.beta, stack, stack).reshape(d * d, d * d)
    rho = (
        np.eye(d * d, dtype=np.complex128)
        + g * np.kron(_lambda_dot(e.u, gens), eye)
        + g * np.kron(eye, _lambda_dot(e.v, gens))
        + 0.5 * d * correlations
    )
    return rho / (d * d)


def reduced_density_from_bloch(u: Any, d: int) -> ComplexMatrix:
    """``rho_A = (1/d)(1 + g_d lambda . u)``; ``(1/3)(1 + sqrt(3) lambda . u)`` at d = 3."""
    vec = np.asarray(u, dtype=np.float64)
    if vec.shape != (d * d - 1,):
        raise DimensionMismatch(f"u must have {d * d - 1} components, got {vec.shape}")
    gens = su_generators(d).lambdas
    return (np.eye(d, dtype=np.complex128) + identity_prefactor(d) * _lambda_dot(vec, gens)) / d
