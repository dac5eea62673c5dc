"""Reproducible Haar-random states and unitaries.

Every random draw comes from a :class:`SeededSampler`, which wraps numpy's
Philox4x64-10 counter-based bit generator keyed by ``seed`` and ``stream``.
Gaussian variates are produced by the Box-Muller transform on its uniform
doubles, so an identical (seed, stream) pair reproduces the same samples on
every platform. A sampler is not thread-safe; give each worker its own
stream.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from concurrence.exceptions import DimensionMismatch, OutOfRange, WrongDimension
from concurrence.linalg import ComplexMatrix
from concurrence.states import (
    PureBipartiteState,
    SchmidtSpectrum,
    apply_local_unitary,
    make_state,
    product_state,
    schmidt_form_state,
)
from concurrence.utils.constants import MAX_SEED


class SeededSampler:
    """Deterministic source of uniform, Gaussian and complex Gaussian variates.

    Args:
        seed: 64-bit seed (low word of the Philox key).
        stream: Independent stream index (high word of the Philox key).
    """

    def __init__(self, seed: int, stream: int = 0) -> None:
        if not 0 <= seed <= MAX_SEED:
            raise OutOfRange(f"seed must lie in [0, 2^64), got {seed}")
        if not 0 <= stream <= MAX_SEED:
            raise OutOfRange(f"stream must lie in [0, 2^64), got {stream}")
        self.seed = seed
        self.stream = stream
        self._generator = np.random.Generator(np.random.Philox(key=seed + (stream << 64)))
        self.position = 0

    def __repr__(self) -> str:
        return f"SeededSampler(seed={self.seed}, stream={self.stream}, position={self.position})"

    def uniform(self, n: int) -> npt.NDArray[np.float64]:
        """``n`` doubles in [0, 1)."""
        self.position += n
        return self._generator.random(n)

    def standard_normal(self, n: int) -> npt.NDArray[np.float64]:
        """``n`` independent N(0, 1) variates (Box-Muller)."""
        m = (n + 1) // 2
        u1 = 1.0 - self.uniform(m)  # (0, 1], keeps the log finite
        u2 = self.uniform(m)
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = 2.0 * math.pi * u2
        return np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[:n]

    def complex_gaussian(self, shape: int | tuple[int, ...]) -> npt.NDArray[np.complex128]:
        """Standard complex Gaussians (``E|z|^2 = 1``)."""
        size = int(np.prod(shape))
        z = self.standard_normal(2 * size)
        return ((z[:size] + 1j * z[size:]) / math.sqrt(2.0)).reshape(shape)


def _require_dimension(d: int) -> None:
    if d < 2:
        raise DimensionMismatch(f"local dimension must be >= 2, got {d}")


def random_pure_state(sampler: SeededSampler, d: int) -> PureBipartiteState:
    """Haar-random pure state of two d-level systems."""
    _require_dimension(d)
    z = sampler.complex_gaussian((d, d))
    return make_state(d, z / np.linalg.norm(z))


def random_unitary(sampler: SeededSampler, d: int) -> ComplexMatrix:
    """Haar-random d x d unitary (QR of a Ginibre matrix with phase fix)."""
    _require_dimension(d)
    z = sampler.complex_gaussian((d, d))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_product_state(sampler: SeededSampler, d: int) -> PureBipartiteState:
    """Tensor product of two independent Haar-random local kets."""
    _require_dimension(d)
    return product_state(sampler.complex_gaussian(d), sampler.complex_gaussian(d))


def random_spectrum(sampler: SeededSampler, d: int, rank: int | None = None) -> SchmidtSpectrum:
    """Random Schmidt spectrum with at most ``rank`` nonzero coefficients."""
    _require_dimension(d)
    rank = d if rank is None else rank
    if not 1 <= rank <= d:
        raise OutOfRange(f"rank must lie in [1, {d}], got {rank}")
    weights = np.zeros(d)
    weights[:rank] = np.abs(sampler.complex_gaussian(rank)) ** 2
    return SchmidtSpectrum.from_squares(weights / weights.sum())


def random_rank2_state(sampler: SeededSampler, d: int = 3) -> PureBipartiteState:
    """Locally rotated state of Schmidt rank two (``kappa_3 = ... = 0``)."""
    spectrum = random_spectrum(sampler, d, rank=2)
    base = schmidt_form_state(spectrum.kappa)
    return apply_local_unitary(base, random_unitary(sampler, d), random_unitary(sampler, d))


def oracle_concurrence_minors(s: PureBipartiteState) -> float:
    """Qutrit minor-sum concurrence by explicit loops over row and column pairs.

    Deliberately shares no code with :mod:`concurrence.measures`.
    """
    if s.d != 3:
        raise WrongDimension(f"minor-sum concurrence is defined for d=3, got d={s.d}")
    a = [[complex(x) for x in row] for row in s.alpha]
    total = 0.0
    for i in range(3):
        for k in range(i + 1, 3):
            for j in range(3):
                for l in range(j + 1, 3):
                    minor = a[i][j] * a[k][l] - a[i][l] * a[k][j]
                    total += minor.real**2 + minor.imag**2
    return min(1.0, max(0.0, math.sqrt(3.0 * total)))
