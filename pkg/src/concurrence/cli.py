"""
Command-line interface for the qudit concurrence toolkit.

Provides commands for measuring states from files, reproducing the epsilon
sweep as CSV, running the randomized property suite and listing fixtures.
"""

import io
import sys
from pathlib import Path
from typing import NoReturn

import click
import yaml
from pydantic import ValidationError

from concurrence import __version__
from concurrence.config.loader import StateLoader
from concurrence.config.models import CheckConfig
from concurrence.display.formatter import ReportFormatter
from concurrence.exceptions import ConcurrenceError, StateFileError
from concurrence.logging import build_logging_config, setup_logging
from concurrence.main import (
    measure_file,
    measure_fixture,
    reports_to_json,
    run_check,
    run_sweep,
    write_sweep,
)
from concurrence.utils.constants import DEFAULT_SWEEP_POINTS, LOGGING_LEVEL, MAX_SEED, ExitCode

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _fail(message: str, code: ExitCode, details: list[str] | None = None) -> NoReturn:
    """Print a diagnostic to stderr and exit with ``code``."""
    click.secho(f"✗ {message}", fg="red", bold=True, err=True)
    for line in details or []:
        click.echo(f"  - {line}", err=True)
    sys.exit(int(code))


@click.group()
@click.version_option(version=__version__, prog_name="qudit-concurrence")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=LOGGING_LEVEL,
    show_default=True,
    help="Logging level (logs go to stderr)",
)
@click.option("--log-file", type=click.Path(dir_okay=False), help="Also write detailed logs here")
@click.pass_context
def main(ctx, log_level: str, log_file: str | None):
    """
    Qudit Concurrence Toolkit

    Concurrence, entanglement of formation and Bloch-vector measures of pure
    two-party states of qubits, qutrits and qudits.
    """
    ctx.ensure_object(dict)
    setup_logging(build_logging_config(level=log_level, log_file=log_file))


@main.command()
@click.argument("state_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--fixture", "fixture_name", help="Measure a built-in fixture instead of a file")
@click.option("--json", "as_json", is_flag=True, help="Emit a machine-readable JSON record")
@click.option("--no-color", is_flag=True, help="Disable colored output")
def measure(state_file: str | None, fixture_name: str | None, as_json: bool, no_color: bool):
    """
    Compute every applicable entanglement measure of a pure state.

    STATE_FILE: Path to a YAML or JSON state file
    """
    if (state_file is None) == (fixture_name is None):
        raise click.UsageError("Give exactly one of STATE_FILE or --fixture")

    try:
        if state_file is not None:
            results = measure_file(Path(state_file))
        else:
            results = measure_fixture(fixture_name)
    except StateFileError as e:
        _fail(f"Invalid state file: {e}", ExitCode.INVALID_INPUT, e.errors)
    except ValidationError as e:
        details = [
            f"[{' -> '.join(str(part) for part in err['loc'])}] {err['msg']}" for err in e.errors()
        ]
        _fail("Invalid state file:", ExitCode.INVALID_INPUT, details)
    except ConcurrenceError as e:
        _fail(f"Invalid state: {e}", ExitCode.INVALID_INPUT)
    except FileNotFoundError as e:
        _fail(f"Error: {e}", ExitCode.INVALID_INPUT)
    except (yaml.YAMLError, ValueError) as e:
        _fail(f"Could not parse state file: {e}", ExitCode.INVALID_INPUT)

    if as_json:
        click.echo(reports_to_json([report for _, report in results]))
        return

    formatter = ReportFormatter(use_colors=not no_color)
    for sf, report in results:
        click.echo(formatter.format_report(report, title=sf.name))


@main.command()
@click.option(
    "--n",
    "n",
    type=click.IntRange(min=2),
    default=DEFAULT_SWEEP_POINTS,
    show_default=True,
    help="Number of epsilon grid points on [0, 1]",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False),
    help="Output CSV path (stdout if omitted)",
)
def sweep(n: int, out: str | None):
    """
    Tabulate P_E and the concurrence along the epsilon family as CSV.
    """
    try:
        rows = run_sweep(n, out)
    except OSError as e:
        _fail(f"Could not write {out}: {e}", ExitCode.IO_ERROR)

    if out is None:
        buffer = io.StringIO()
        write_sweep(rows, buffer)
        click.echo(buffer.getvalue(), nl=False)
    else:
        click.secho(f"✓ Wrote {len(rows)} rows to {out}", fg="green", err=True)


@main.command()
@click.option("--trials", type=int, help="Number of random trials [default: 500]")
@click.option(
    "--seed", type=click.IntRange(0, MAX_SEED), help="Seed reproducing the run [default: 7]"
)
@click.option("--d", "d", type=int, help="Local dimension [default: 3]")
@click.option("--workers", type=int, help="Parallel worker threads [default: 1]")
@click.option(
    "--config",
    "config_file",
    type=click.Path(exists=True, dir_okay=False),
    help="YAML file with trials/seed/d/workers (flags take precedence)",
)
@click.option("--no-color", is_flag=True, help="Disable colored output")
def check(
    trials: int | None,
    seed: int | None,
    d: int | None,
    workers: int | None,
    config_file: str | None,
    no_color: bool,
):
    """
    Run the randomized property suite on Haar-random states.
    """
    overrides = {"trials": trials, "seed": seed, "d": d, "workers": workers}
    try:
        if config_file is not None:
            config = StateLoader().load_check_config(config_file, **overrides)
        else:
            config = CheckConfig(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as e:
        details = [
            f"[{' -> '.join(str(part) for part in err['loc'])}] {err['msg']}" for err in e.errors()
        ]
        _fail("Invalid check configuration:", ExitCode.INVALID_INPUT, details)
    except (yaml.YAMLError, ValueError) as e:
        _fail(f"Invalid check configuration: {e}", ExitCode.INVALID_INPUT)

    summary = run_check(config)
    formatter = ReportFormatter(use_colors=not no_color)
    click.echo(formatter.format_check_summary(summary))

    if not summary.passed:
        failures = summary.failures()
        details = [
            f"{r.name.value}: reproduce with --seed {config.seed} --d {config.d} "
            f"(trial {r.failing_trial})"
            for r in failures
        ]
        _fail(f"{len(failures)} property check(s) failed", ExitCode.PROPERTY_FAILURE, details)

    click.secho("✓ All properties hold", fg="green", bold=True)


@main.command(name="fixtures")
def list_fixtures():
    """
    List all built-in state fixtures.
    """
    loader = StateLoader()
    names = loader.list_fixtures()

    if not names:
        click.echo("No fixtures found.")
        return

    click.secho(f"Available Fixtures ({len(names)}):", bold=True)
    click.echo()

    for name in names:
        try:
            sf = loader.load_fixture(name)
            click.secho(f"  {name}", fg="cyan", bold=True)
            click.echo(f"    Dimension: {sf.d}")
            click.echo(f"    Description: {sf.description or 'No description'}")
            click.echo()
        except Exception as e:
            click.secho(f"  {name}", fg="cyan", bold=True)
            click.secho(f"    Error loading fixture: {e}", fg="red")
            click.echo()


if __name__ == "__main__":
    main()
