"""Entanglement measures of pure two-party states.

Concurrence is available through independent routes that must agree:

* ``concurrence_minors``: 2x2 minors of the qutrit amplitude matrix,
* ``concurrence_schmidt``: symmetric function of the Schmidt spectrum (any d),
* ``concurrence_bloch``: ``sqrt(1 - |u|^2)`` from the local generator vector,
* ``concurrence_2x2``: the qubit determinant formula.

Entropies are in bits (ebits). All concurrences are clamped into [0, 1].
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Optional

import numpy as np

from concurrence.config.models import MeasureReport, SweepRow
from concurrence.exceptions import LengthMismatch, OutOfRange, WrongDimension
from concurrence.gellmann import bloch_expansion
from concurrence.linalg import CubicCoefficients, determinant, solve_monic_cubic_real
from concurrence.logging import get_logger
from concurrence.states import (
    DensityMatrix,
    PureBipartiteState,
    SchmidtSpectrum,
    check_family_constraint,
    epsilon_coefficients,
    reduced_density,
    schmidt_spectrum,
)
from concurrence.utils.constants import (
    RANK2_BOUND_TOLERANCE,
    RANK2_MAX_CONCURRENCE,
    RANK_TOLERANCE,
    Side,
)

logger = get_logger(__name__)

# The nine 2x2 minors of the qutrit amplitude matrix, as
# alpha[a] alpha[b] - alpha[c] alpha[e] with zero-based (row, col) pairs
_QUTRIT_MINORS = (
    ((0, 0), (1, 1), (0, 1), (1, 0)),
    ((0, 2), (1, 0), (0, 0), (1, 2)),
    ((0, 1), (1, 2), (0, 2), (1, 1)),
    ((0, 1), (2, 0), (0, 0), (2, 1)),
    ((0, 0), (2, 2), (0, 2), (2, 0)),
    ((1, 0), (2, 1), (1, 1), (2, 0)),
    ((1, 2), (2, 0), (1, 0), (2, 2)),
    ((0, 2), (2, 1), (0, 1), (2, 2)),
    ((1, 1), (2, 2), (1, 2), (2, 1)),
)


def _unit(x: float) -> float:
    return min(1.0, max(0.0, x))


def _require_dimension(s: PureBipartiteState, allowed: tuple[int, ...], what: str) -> None:
    if s.d not in allowed:
        raise WrongDimension(f"{what} is defined for d in {allowed}, got d={s.d}")


def concurrence_minors(s: PureBipartiteState) -> float:
    """Qutrit concurrence ``sqrt(3 sum |minor|^2)`` over the nine 2x2 minors."""
    _require_dimension(s, (3,), "minor-sum concurrence")
    a = s.alpha
    total = math.fsum(abs(a[p] * a[q] - a[r] * a[t]) ** 2 for p, q, r, t in _QUTRIT_MINORS)
    return _unit(math.sqrt(3.0 * total))


def concurrence_schmidt(kappa: SchmidtSpectrum, d: int) -> float:
    """``sqrt((2d / (d - 1)) sum_{i<j} kappa_i^2 kappa_j^2)``.

    Reduces to ``2 kappa_1 kappa_2`` at d = 2.

    Raises:
        LengthMismatch: If the spectrum does not have d coefficients.
    """
    if kappa.d != d:
        raise LengthMismatch(f"spectrum has {kappa.d} coefficients, expected {d}")
    if d < 2:
        raise WrongDimension(f"concurrence needs d >= 2, got {d}")
    p = kappa.squares
    pair_sum = math.fsum(x * y for x, y in combinations(p, 2))
    return _unit(math.sqrt(max(0.0, 2.0 * d / (d - 1) * pair_sum)))


def concurrence_bloch(s: PureBipartiteState) -> float:
    """``sqrt(1 - |u|^2)`` for qubits and qutrits."""
    _require_dimension(s, (2, 3), "Bloch-vector concurrence")
    u = bloch_expansion(s).u
    return _unit(math.sqrt(max(0.0, 1.0 - float(u @ u))))


def concurrence_2x2(s: PureBipartiteState) -> float:
    """``2 |a11 a22 - a12 a21|``."""
    _require_dimension(s, (2,), "qubit concurrence")
    a = s.alpha
    return _unit(2.0 * abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """``-sum p log2 p`` over the clamped spectrum, with ``0 log 0 = 0``."""
    p = rho.eigenvalues()
    p = p[p > 0.0]
    return max(0.0, float(-np.sum(p * np.log2(p))))


def binary_entropy(x: float) -> float:
    """``h(x) = -x log2 x - (1 - x) log2(1 - x)``; ``h(0) = h(1) = 0``."""
    if not 0.0 <= x <= 1.0:
        raise OutOfRange(f"binary entropy argument must lie in [0, 1], got {x!r}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof_2x2(c: float) -> float:
    """Two-qubit entanglement of formation ``h((1 + sqrt(1 - C^2)) / 2)``."""
    if not 0.0 <= c <= 1.0:
        raise OutOfRange(f"qubit concurrence must lie in [0, 1], got {c!r}")
    return binary_entropy(0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - c * c))))


def eof_qutrit_rank2(c: float) -> float:
    """Entanglement of formation of a qutrit state with ``kappa_3 = 0``.

    ``h((1 + sqrt(1 - 4C^2/3)) / 2)``. The caller is responsible for the
    rank-2 condition; only the concurrence bound is checked here.

    Raises:
        OutOfRange: If ``c`` is negative or exceeds sqrt(3)/2.
    """
    if not 0.0 <= c <= RANK2_MAX_CONCURRENCE + RANK2_BOUND_TOLERANCE:
        raise OutOfRange(
            f"rank-2 qutrit concurrence must lie in [0, sqrt(3)/2], got {c!r}; "
            "the state is not of Schmidt rank 2"
        )
    return binary_entropy(0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - 4.0 * c * c / 3.0))))


def p_e(a1: float, a2: float, a3: float) -> float:
    """``(|a1 a2| + |a1 a3| + |a2 a3|) / 3`` for the diagonal qutrit family."""
    check_family_constraint(a1, a2, a3)
    return (abs(a1 * a2) + abs(a1 * a3) + abs(a2 * a3)) / 3.0


def concurrence_family(a1: float, a2: float, a3: float) -> float:
    """Concurrence of the diagonal qutrit family, ``sqrt(sum (a_i a_j)^2 / 3)``."""
    check_family_constraint(a1, a2, a3)
    total = (a1 * a2) ** 2 + (a1 * a3) ** 2 + (a2 * a3) ** 2
    return _unit(math.sqrt(total / 3.0))


def determinant_sq(s: PureBipartiteState) -> float:
    """``|det alpha|^2``; the product of the Schmidt squares."""
    return abs(determinant(s.alpha)) ** 2


def spectrum_from_invariants(c: float, det_sq: float) -> SchmidtSpectrum:
    """Qutrit Schmidt spectrum from ``C`` and ``|det alpha|^2`` alone.

    The squares are the roots of ``x^3 - x^2 + (C^2/3) x - |det alpha|^2``.
    """
    roots = solve_monic_cubic_real(CubicCoefficients(-1.0, c * c / 3.0, -det_sq))
    return SchmidtSpectrum.from_squares(roots)


def vieta_residuals(s: PureBipartiteState) -> tuple[float, float, float]:
    """Residuals of the three root relations of the qutrit characteristic cubic.

    Returns:
        ``(|sum l - 1|, |sum_{i<j} l_i l_j - C^2/3|, |prod l - |det alpha|^2|)``
        with ``l`` the eigenvalues of ``rho_A``.
    """
    _require_dimension(s, (3,), "Vieta relations")
    lam = reduced_density(s, Side.A).eigenvalues()
    c = concurrence_minors(s)
    l1, l2, l3 = lam
    return (
        abs(l1 + l2 + l3 - 1.0),
        abs(l1 * l2 + l1 * l3 + l2 * l3 - c * c / 3.0),
        abs(l1 * l2 * l3 - determinant_sq(s)),
    )


def is_maximally_entangled(s: PureBipartiteState, tol: float = 1e-9) -> bool:
    """True when every Schmidt coefficient equals ``1/sqrt(d)`` within ``tol``."""
    flat = 1.0 / math.sqrt(s.d)
    return all(abs(k - flat) <= tol for k in schmidt_spectrum(s).kappa)


def family_coefficients(s: PureBipartiteState) -> Optional[tuple[float, float, float]]:
    """``(a1, a2, a3)`` when ``s`` is a real diagonal qutrit state, else None."""
    if s.d != 3:
        return None
    a = s.alpha
    if np.any(a[~np.eye(3, dtype=bool)]) or np.any(a.imag):
        return None
    a1, a2, a3 = (math.sqrt(3.0) * float(x) for x in np.diag(a).real)
    return a1, a2, a3


def full_report(s: PureBipartiteState) -> MeasureReport:
    """Every applicable measure for ``s`` plus the spread between routes."""
    d = s.d
    spectrum = schmidt_spectrum(s)
    c_schmidt = concurrence_schmidt(spectrum, d)
    c_minors = concurrence_minors(s) if d == 3 else None
    c_bloch = concurrence_bloch(s) if d in (2, 3) else None
    c_2x2 = concurrence_2x2(s) if d == 2 else None

    eof_closed_form = None
    if d == 2 and c_2x2 is not None:
        eof_closed_form = eof_2x2(c_2x2)
    # kappa_3 is the square root of an eigenvalue, so rounding noise of ~1e-16
    # in rho_A shows up as ~1e-8 here; locally rotated rank-2 states usually
    # miss this gate and only exactly diagonal ones pass it
    elif d == 3 and c_minors is not None and spectrum.kappa[-1] < RANK_TOLERANCE:
        eof_closed_form = eof_qutrit_rank2(c_minors)

    family = family_coefficients(s)
    routes = [c for c in (c_minors, c_schmidt, c_bloch, c_2x2) if c is not None]
    residual = max((abs(x - y) for x, y in combinations(routes, 2)), default=0.0)
    logger.debug("d=%d routes=%s residual=%.3e", d, routes, residual)

    return MeasureReport(
        d=d,
        c_minors=c_minors,
        c_schmidt=c_schmidt,
        c_bloch=c_bloch,
        c_2x2=c_2x2,
        det_alpha_sq=determinant_sq(s),
        entropy_bits=von_neumann_entropy(reduced_density(s, Side.A)),
        eof_closed_form=eof_closed_form,
        p_e=p_e(*family) if family is not None else None,
        schmidt_coefficients=list(spectrum.kappa),
        max_route_residual=residual,
    )


def epsilon_sweep(n: int) -> list[SweepRow]:
    """``P_E`` and ``C`` on ``n`` equally spaced points of ``epsilon`` in [0, 1]."""
    if n < 2:
        raise OutOfRange(f"sweep needs at least 2 points, got {n}")
    rows = []
    for k in range(n):
        eps = k / (n - 1)
        a = epsilon_coefficients(eps)
        rows.append(SweepRow(epsilon=eps, p_e=p_e(*a), c=concurrence_family(*a)))
    return rows
