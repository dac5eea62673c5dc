"""
Pydantic models for state files, reports and run configuration.

StateFile mirrors schemas/state-schema.yaml; MeasureReport mirrors
schemas/report-schema.json.
"""

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from concurrence.utils.constants import (
    CSV_SIGNIFICANT_DIGITS,
    DEFAULT_CHECK_DIMENSION,
    DEFAULT_CHECK_SEED,
    DEFAULT_CHECK_TRIALS,
    DEFAULT_CHECK_WORKERS,
    MAX_DIMENSION,
    MAX_SEED,
    RANGE_TOLERANCE,
    ROUNDING_SLACK,
    PropertyName,
)


# ===== State Files =====


class StateFile(BaseModel):
    """Pure two-party state as stored on disk.

    ``alpha[i][j]`` is the ``[re, im]`` amplitude of ``|i, j>``.
    """

    d: int = Field(ge=2, le=MAX_DIMENSION)
    alpha: list[list[tuple[float, float]]]
    name: Optional[str] = None
    description: Optional[str] = None

    @model_validator(mode="after")
    def validate_alpha_shape(self) -> "StateFile":
        if len(self.alpha) != self.d or any(len(row) != self.d for row in self.alpha):
            raise ValueError(f"alpha must be a {self.d}x{self.d} array of [re, im] pairs")
        return self

    def to_matrix(self) -> np.ndarray:
        """Amplitudes as a complex ``d x d`` array."""
        pairs = np.asarray(self.alpha, dtype=np.float64)
        return pairs[..., 0] + 1j * pairs[..., 1]

    @classmethod
    def from_matrix(cls, alpha: np.ndarray, name: Optional[str] = None) -> "StateFile":
        a = np.asarray(alpha, dtype=np.complex128)
        rows = [[(float(z.real), float(z.imag)) for z in row] for row in a]
        return cls(d=a.shape[0], alpha=rows, name=name)


# ===== Measure Reports =====


class MeasureReport(BaseModel):
    """Every entanglement measure computed for one state."""

    d: int = Field(ge=2)
    c_minors: Optional[float] = None
    c_schmidt: float
    c_bloch: Optional[float] = None
    c_2x2: Optional[float] = None
    det_alpha_sq: float = Field(ge=0.0)
    entropy_bits: float
    eof_closed_form: Optional[float] = None
    p_e: Optional[float] = None
    schmidt_coefficients: list[float]
    max_route_residual: float = Field(ge=0.0)

    @model_validator(mode="after")
    def validate_ranges(self) -> "MeasureReport":
        for name, value in self.concurrences().items():
            if not -ROUNDING_SLACK <= value <= 1.0 + RANGE_TOLERANCE:
                raise ValueError(f"{name} = {value!r} outside [0, 1]")
        if not -ROUNDING_SLACK <= self.entropy_bits <= math.log2(self.d) + RANGE_TOLERANCE:
            raise ValueError(f"entropy_bits = {self.entropy_bits!r} outside [0, log2 d]")
        return self

    def concurrences(self) -> dict[str, float]:
        """Present concurrence routes by field name."""
        fields = {
            "c_minors": self.c_minors,
            "c_schmidt": self.c_schmidt,
            "c_bloch": self.c_bloch,
            "c_2x2": self.c_2x2,
        }
        return {k: v for k, v in fields.items() if v is not None}


# ===== Epsilon Sweep =====


class SweepRow(BaseModel):
    """One point of the epsilon sweep of the diagonal qutrit family."""

    epsilon: float = Field(ge=0.0, le=1.0)
    p_e: float
    c: float

    @model_validator(mode="after")
    def validate_dominance(self) -> "SweepRow":
        if self.c < self.p_e - ROUNDING_SLACK:
            raise ValueError(f"concurrence {self.c!r} below P_E {self.p_e!r}")
        return self

    def csv_fields(self) -> list[str]:
        """Values formatted with a fixed number of significant digits."""
        return [f"{x:.{CSV_SIGNIFICANT_DIGITS}g}" for x in (self.epsilon, self.p_e, self.c)]


# ===== Check Suite =====


class CheckConfig(BaseModel):
    """Randomized property suite settings."""

    trials: int = Field(DEFAULT_CHECK_TRIALS, ge=1)
    seed: int = Field(DEFAULT_CHECK_SEED, ge=0, le=MAX_SEED)
    d: int = Field(DEFAULT_CHECK_DIMENSION, ge=2, le=MAX_DIMENSION)
    workers: int = Field(DEFAULT_CHECK_WORKERS, ge=1, le=64)


class PropertyResult(BaseModel):
    """Worst residual of one property over all trials."""

    name: PropertyName
    worst_residual: float
    tolerance: float
    failing_trial: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.failing_trial is None


class CheckSummary(BaseModel):
    """Outcome of a randomized check run."""

    config: CheckConfig
    results: list[PropertyResult] = Field(default_factory=list)

    @field_validator("results")
    @classmethod
    def validate_unique_names(cls, v: list[PropertyResult]) -> list[PropertyResult]:
        names = [r.name for r in v]
        if len(names) != len(set(names)):
            raise ValueError("duplicate property results")
        return v

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[PropertyResult]:
        return [r for r in self.results if not r.passed]
