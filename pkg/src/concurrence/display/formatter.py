"""
Formatters for displaying measure reports and check summaries.

Provides human-readable formatting of MeasureReport and CheckSummary objects.
"""

from typing import Optional

from concurrence.config.models import CheckSummary, MeasureReport, PropertyResult
from concurrence.utils.constants import DEFAULT_PROPERTY_TOLERANCE


# ANSI color codes
class Colors:
    """ANSI color codes for terminal output."""

    RESET = "\033[0m"
    BOLD = "\033[1m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    BLUE = "\033[94m"
    CYAN = "\033[96m"
    GRAY = "\033[90m"
    RED = "\033[91m"


# Display labels of the concurrence routes
ROUTE_LABELS = {
    "c_minors": "2x2 minors",
    "c_schmidt": "Schmidt spectrum",
    "c_bloch": "Bloch vector",
    "c_2x2": "Qubit determinant",
}


class ReportFormatter:
    """Formats measure reports and check summaries for display."""

    def __init__(self, use_colors: bool = True):
        """
        Initialize the formatter.

        Args:
            use_colors: Whether to use ANSI colors in output
        """
        self.use_colors = use_colors

    def format_report(self, report: MeasureReport, title: Optional[str] = None) -> str:
        """
        Format a complete measure report.

        Args:
            report: MeasureReport to format
            title: Optional state name shown in the header

        Returns:
            Formatted string
        """
        sections = [self._format_header(title or f"d = {report.d}")]
        sections.append(self.format_concurrences(report))
        sections.append(self.format_entropies(report))
        sections.append(self.format_spectrum(report))
        return "\n".join(sections)

    def format_concurrences(self, report: MeasureReport) -> str:
        """
        Format every concurrence route and their spread.

        Args:
            report: MeasureReport to format

        Returns:
            Formatted string
        """
        lines = [self._section_header("Concurrence")]
        for field, value in report.concurrences().items():
            lines.append(f"  {self._label(ROUTE_LABELS[field] + ':')} {self._num(value)}")

        residual = report.max_route_residual
        if residual < DEFAULT_PROPERTY_TOLERANCE:
            marker = self._paint("✓", Colors.GREEN)
        else:
            marker = self._paint("!", Colors.YELLOW)
        label = self._paint("Max route residual:", Colors.GRAY)
        lines.append(f"  {marker} {label} {residual:.3e}")
        return "\n".join(lines)

    def format_entropies(self, report: MeasureReport) -> str:
        """
        Format the entropy based measures.

        Args:
            report: MeasureReport to format

        Returns:
            Formatted string
        """
        lines = [
            self._section_header("Entanglement"),
            f"  {self._label('Entropy (ebits):')} {self._num(report.entropy_bits)}",
        ]
        if report.eof_closed_form is not None:
            lines.append(
                f"  {self._label('Closed-form EOF:')} {self._num(report.eof_closed_form)}"
            )
        if report.p_e is not None:
            lines.append(f"  {self._label('P_E:')} {self._num(report.p_e)}")
        lines.append(f"  {self._label('|det alpha|^2:')} {self._num(report.det_alpha_sq)}")
        return "\n".join(lines)

    def format_spectrum(self, report: MeasureReport) -> str:
        """Format the Schmidt coefficients."""
        values = ", ".join(self._num(k) for k in report.schmidt_coefficients)
        return f"{self._section_header('Schmidt Coefficients')}\n  [{values}]"

    def format_check_summary(self, summary: CheckSummary) -> str:
        """
        Format the outcome of a randomized check run.

        Args:
            summary: CheckSummary to format

        Returns:
            Formatted string
        """
        cfg = summary.config
        lines = [
            self._format_header(f"Property Checks (d = {cfg.d})"),
            f"  {self._label('Trials:')} {cfg.trials}",
            f"  {self._label('Seed:')} {cfg.seed}",
            f"  {self._label('Workers:')} {cfg.workers}",
            self._section_header(f"Properties ({len(summary.results)})"),
        ]
        for result in summary.results:
            lines.append(self._format_result(result, cfg.seed))

        if summary.passed:
            verdict = self._paint("PASSED", Colors.GREEN)
        else:
            verdict = self._paint("FAILED", Colors.RED)
        lines.append(f"\n{self._paint('Result:', Colors.BOLD)} {verdict}")
        return "\n".join(lines)

    def _format_result(self, result: PropertyResult, seed: int) -> str:
        """Format one property line."""
        name = result.name.value
        residual = f"worst {result.worst_residual:.3e} (tol {result.tolerance:.0e})"
        if result.passed:
            tick = self._paint("✓", Colors.GREEN)
            return f"  {tick} {name:<26} {self._paint(residual, Colors.GRAY)}"
        where = self._paint(f"seed={seed}, trial={result.failing_trial}", Colors.RED)
        return f"  {self._paint('✗', Colors.RED)} {name:<26} {residual} {where}"

    def _format_header(self, title: str) -> str:
        heading = self._paint(f"Entanglement Report: {title}", Colors.BOLD)
        rule = self._paint("=" * 60, Colors.GRAY)
        return f"\n{heading}\n{rule}"

    def _num(self, value: float) -> str:
        return f"{value:.10g}"

    def _section_header(self, title: str) -> str:
        return f"\n{self._paint(title, Colors.CYAN)}:"

    def _label(self, text: str) -> str:
        return self._paint(text, Colors.BLUE)

    def _paint(self, text: str, code: str) -> str:
        if not self.use_colors:
            return text
        return f"{code}{text}{Colors.RESET}"


# Convenience functions


def format_report(
    report: MeasureReport, title: Optional[str] = None, use_colors: bool = True
) -> str:
    """
    Convenience function to format a measure report.

    Args:
        report: MeasureReport to format
        title: Optional state name
        use_colors: Whether to use ANSI colors

    Returns:
        Formatted string
    """
    formatter = ReportFormatter(use_colors=use_colors)
    return formatter.format_report(report, title)


def format_check_summary(summary: CheckSummary, use_colors: bool = True) -> str:
    """
    Convenience function to format a check summary.

    Args:
        summary: CheckSummary to format
        use_colors: Whether to use ANSI colors

    Returns:
        Formatted string
    """
    formatter = ReportFormatter(use_colors=use_colors)
    return formatter.format_check_summary(summary)
