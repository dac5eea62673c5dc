"""Randomized property suite.

Each trial draws a Haar-random state and a pair of local unitaries from its
own sampler ``SeededSampler(seed, stream=trial)``, evaluates every property
applicable to the dimension and records one residual per property. Results
are reduced with ``max`` and the failing trial is the smallest failing
index, so serial and parallel runs give identical summaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from concurrence.config.models import CheckConfig, CheckSummary, MeasureReport, PropertyResult
from concurrence.gellmann import bloch_expansion, bloch_norm
from concurrence.logging import get_logger
from concurrence.measures import (
    concurrence_minors,
    determinant_sq,
    full_report,
    spectrum_from_invariants,
    vieta_residuals,
)
from concurrence.parallel import WorkerPool
from concurrence.sampling import (
    SeededSampler,
    oracle_concurrence_minors,
    random_pure_state,
    random_unitary,
)
from concurrence.states import PureBipartiteState, apply_local_unitary, reduced_density
from concurrence.utils.constants import (
    DEFAULT_PROPERTY_TOLERANCE,
    VIETA_TOLERANCE,
    PropertyName,
    Side,
)

logger = get_logger(__name__)


@dataclass
class TrialOutcome:
    """Residual of every evaluated property for one trial."""

    trial: int
    residuals: dict[PropertyName, float] = field(default_factory=dict)


def property_tolerances(d: int) -> dict[PropertyName, float]:
    """Properties that apply at local dimension ``d`` and their pass thresholds."""
    props = {
        PropertyName.SCHMIDT_SUM: DEFAULT_PROPERTY_TOLERANCE,
        PropertyName.CONCURRENCE_RANGE: DEFAULT_PROPERTY_TOLERANCE,
        PropertyName.BLOCH_NORMS: DEFAULT_PROPERTY_TOLERANCE,
        PropertyName.REDUCED_SPECTRA: DEFAULT_PROPERTY_TOLERANCE,
        PropertyName.LOCAL_UNITARY_INVARIANCE: DEFAULT_PROPERTY_TOLERANCE,
    }
    if d in (2, 3):
        props[PropertyName.ROUTE_AGREEMENT] = DEFAULT_PROPERTY_TOLERANCE
    if d == 3:
        props[PropertyName.VIETA] = VIETA_TOLERANCE
        props[PropertyName.CUBIC_CONSISTENCY] = DEFAULT_PROPERTY_TOLERANCE
        props[PropertyName.ORACLE_EQUIVALENCE] = DEFAULT_PROPERTY_TOLERANCE
    return props


def report_distance(a: MeasureReport, b: MeasureReport) -> float:
    """Largest change of any report field; ``inf`` if a field appears in only one."""
    da, db = a.model_dump(), b.model_dump()
    worst = 0.0
    for key, x in da.items():
        y = db[key]
        if (x is None) != (y is None):
            return math.inf
        if x is None:
            continue
        diff = np.max(np.abs(np.asarray(x, dtype=float) - np.asarray(y, dtype=float)))
        worst = max(worst, float(diff))
    return worst


def _cubic_deviation(s: PureBipartiteState) -> float:
    eig = np.sort(reduced_density(s, Side.A).eigenvalues())
    roots = np.sort(spectrum_from_invariants(concurrence_minors(s), determinant_sq(s)).squares)
    return float(np.max(np.abs(eig - roots)))


def _reduced_spectra_gap(s: PureBipartiteState) -> float:
    wa = reduced_density(s, Side.A).eigenvalues()
    wb = reduced_density(s, Side.B).eigenvalues()
    return float(np.max(np.abs(wa - wb)))


def run_trial(seed: int, trial: int, d: int) -> TrialOutcome:
    """Evaluate every applicable property on one random sample."""
    sampler = SeededSampler(seed, stream=trial)
    s = random_pure_state(sampler, d)
    ua, ub = random_unitary(sampler, d), random_unitary(sampler, d)

    report = full_report(s)
    u_norm, v_norm = bloch_norm(bloch_expansion(s))
    concurrences = report.concurrences().values()

    checks: dict[PropertyName, Callable[[], float]] = {
        PropertyName.SCHMIDT_SUM: lambda: abs(
            math.fsum(k * k for k in report.schmidt_coefficients) - 1.0
        ),
        PropertyName.CONCURRENCE_RANGE: lambda: max(max(-c, c - 1.0, 0.0) for c in concurrences),
        PropertyName.BLOCH_NORMS: lambda: abs(u_norm - v_norm),
        PropertyName.REDUCED_SPECTRA: lambda: _reduced_spectra_gap(s),
        PropertyName.LOCAL_UNITARY_INVARIANCE: lambda: report_distance(
            report, full_report(apply_local_unitary(s, ua, ub))
        ),
        PropertyName.ROUTE_AGREEMENT: lambda: report.max_route_residual,
        PropertyName.VIETA: lambda: max(vieta_residuals(s)),
        PropertyName.CUBIC_CONSISTENCY: lambda: _cubic_deviation(s),
        PropertyName.ORACLE_EQUIVALENCE: lambda: abs(
            oracle_concurrence_minors(s) - concurrence_minors(s)
        ),
    }

    outcome = TrialOutcome(trial=trial)
    for name in property_tolerances(d):
        outcome.residuals[name] = checks[name]()
    return outcome


def summarize(config: CheckConfig, outcomes: list[TrialOutcome]) -> CheckSummary:
    """Reduce per-trial residuals to the worst residual per property."""
    results = []
    for name, tolerance in property_tolerances(config.d).items():
        worst = max(o.residuals[name] for o in outcomes)
        failing = [o.trial for o in outcomes if not o.residuals[name] <= tolerance]
        result = PropertyResult(
            name=name,
            worst_residual=worst,
            tolerance=tolerance,
            failing_trial=min(failing) if failing else None,
        )
        if not result.passed:
            logger.warning(
                "Property %s failed: residual %.3e > %.1e (seed=%d, trial=%d)",
                name.value,
                worst,
                tolerance,
                config.seed,
                result.failing_trial,
            )
        results.append(result)
    return CheckSummary(config=config, results=results)


def run_checks(config: CheckConfig) -> CheckSummary:
    """Run ``config.trials`` random trials, in parallel when ``config.workers > 1``."""
    logger.info(
        "Running %d trials (seed=%d, d=%d, workers=%d)",
        config.trials,
        config.seed,
        config.d,
        config.workers,
    )

    def one(trial: int) -> TrialOutcome:
        return run_trial(config.seed, trial, config.d)

    if config.workers == 1:
        outcomes = [one(t) for t in range(config.trials)]
    else:
        with WorkerPool(max_workers=config.workers) as pool:
            outcomes = list(pool.map_unordered(one, range(config.trials)))

    return summarize(config, outcomes)
