"""
Exception hierarchy for the concurrence toolkit.

Every numerical precondition violation raises a subclass of
:class:`ConcurrenceError`, which is itself a ``ValueError`` so that callers
catching bad input the usual way keep working.
"""

from __future__ import annotations


class ConcurrenceError(ValueError):
    """Base class for invalid numerical input."""


class NotSquare(ConcurrenceError):
    """Matrix is not square."""


class NotHermitian(ConcurrenceError):
    """Matrix differs from its adjoint beyond tolerance."""


class NotUnitary(ConcurrenceError):
    """U^dagger U differs from the identity beyond tolerance."""


class NotPositive(ConcurrenceError):
    """Density matrix has an eigenvalue below the clamp tolerance."""


class ComplexRoots(ConcurrenceError):
    """Cubic has a complex-conjugate root pair."""


class ZeroState(ConcurrenceError):
    """All amplitudes vanish."""


class NotNormalized(ConcurrenceError):
    """Amplitude norm is too far from 1 to renormalize."""


class DimensionMismatch(ConcurrenceError):
    """Array shape does not match the declared dimension."""


class WrongDimension(ConcurrenceError):
    """Operation is only defined for other local dimensions."""


class LengthMismatch(ConcurrenceError):
    """Spectrum length does not match the declared dimension."""


class ConstraintViolation(ConcurrenceError):
    """Family coefficients violate a1^2 + a2^2 + a3^2 = 3."""


class OutOfRange(ConcurrenceError):
    """Scalar argument outside its domain."""


class StateFileError(ValueError):
    """State document failed schema validation.

    Attributes:
        errors: Individual schema violation messages.
    """

    def __init__(self, message: str, errors: list[str] | None = None) -> None:
        super().__init__(message)
        self.errors = errors or []
