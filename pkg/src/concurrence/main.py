"""Service entry points behind the CLI.

Each function wires the loader, the numerical modules and the output
formats together, and raises the library exceptions unchanged so that the
CLI decides on exit codes.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO

from concurrence.checks import run_checks
from concurrence.config.loader import StateLoader
from concurrence.config.models import CheckConfig, CheckSummary, MeasureReport, StateFile, SweepRow
from concurrence.config.validator import StateValidator
from concurrence.logging import get_logger
from concurrence.measures import epsilon_sweep, full_report
from concurrence.states import PureBipartiteState, make_state
from concurrence.utils.constants import CSV_HEADER, DEFAULT_SWEEP_POINTS

logger = get_logger(__name__)


def state_from_file(state_file: StateFile) -> PureBipartiteState:
    """Validated state for a parsed state file."""
    return make_state(state_file.d, state_file.to_matrix())


def measure_states(state_files: list[StateFile]) -> list[tuple[StateFile, MeasureReport]]:
    """Full measure report for every state."""
    results = []
    for sf in state_files:
        report = full_report(state_from_file(sf))
        logger.info("Measured %s: C=%.10g", sf.name or f"d={sf.d} state", report.c_schmidt)
        results.append((sf, report))
    return results


def measure_file(path: str | Path) -> list[tuple[StateFile, MeasureReport]]:
    """Reports for every state in a state file."""
    return measure_states(StateLoader().load_states(path))


def measure_fixture(name: str) -> list[tuple[StateFile, MeasureReport]]:
    """Report for a built-in fixture."""
    return measure_states([StateLoader().load_fixture(name)])


def reports_to_json(reports: list[MeasureReport]) -> str:
    """JSON record (a list for several states) checked against the report schema.

    Raises:
        ValueError: If a report does not conform to report-schema.json.
    """
    validator = StateValidator()
    payload = [r.model_dump(mode="json") for r in reports]
    for record in payload:
        is_valid, errors = validator.validate_report(record)
        if not is_valid:
            raise ValueError("report violates the report schema: " + "; ".join(errors))
    return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)


def write_sweep(rows: list[SweepRow], stream: IO[str]) -> None:
    """Write sweep rows as CSV with a fixed header and ``\\n`` line endings."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())


def run_sweep(n: int = DEFAULT_SWEEP_POINTS, out: str | Path | None = None) -> list[SweepRow]:
    """Compute the epsilon sweep and write it to ``out`` if given.

    Raises:
        OSError: If the output file cannot be written.
    """
    rows = epsilon_sweep(n)
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="") as f:
            write_sweep(rows, f)
        logger.info("Wrote %d sweep rows to %s", len(rows), out)
    return rows


def run_check(config: CheckConfig) -> CheckSummary:
    """Run the randomized property suite."""
    summary = run_checks(config)
    logger.info(
        "Check run finished: %d/%d properties passed",
        len(summary.results) - len(summary.failures()),
        len(summary.results),
    )
    return summary
