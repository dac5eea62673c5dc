"""Unit tests for the report formatter."""

import math

from concurrence.config.models import CheckConfig, CheckSummary, PropertyResult
from concurrence.display.formatter import (
    Colors,
    ReportFormatter,
    format_check_summary,
    format_report,
)
from concurrence.measures import full_report
from concurrence.states import maximally_entangled_state, schmidt_form_state
from concurrence.utils.constants import PropertyName


def test_report_sections():
    report = full_report(schmidt_form_state([1 / math.sqrt(2.0), 1 / math.sqrt(2.0), 0.0]))
    text = format_report(report, title="singlet", use_colors=False)

    assert "Entanglement Report: singlet" in text
    assert "2x2 minors: 0.8660254038" in text
    assert "Bloch vector:" in text
    assert "Closed-form EOF: 1" in text
    assert "P_E: 0.5" in text
    assert Colors.RESET not in text


def test_colors_toggle():
    report = full_report(maximally_entangled_state(2))
    assert Colors.CYAN in ReportFormatter(use_colors=True).format_report(report)
    assert "Qubit determinant: 1" in ReportFormatter(use_colors=False).format_report(report)


def test_check_summary_failure_names_seed_and_trial():
    summary = CheckSummary(
        config=CheckConfig(trials=10, seed=99, d=3),
        results=[
            PropertyResult(name=PropertyName.VIETA, worst_residual=1e-15, tolerance=1e-10),
            PropertyResult(
                name=PropertyName.ROUTE_AGREEMENT,
                worst_residual=1e-3,
                tolerance=1e-9,
                failing_trial=6,
            ),
        ],
    )
    text = format_check_summary(summary, use_colors=False)

    assert "Seed: 99" in text
    assert "✓ vieta" in text
    assert "✗ route_agreement" in text
    assert "seed=99, trial=6" in text
    assert "Result: FAILED" in text
