"""
State and report validator using JSON Schema.

Provides validation against state-schema.yaml and report-schema.json.
"""

import json
from pathlib import Path
from typing import Any

import jsonschema
import yaml
from jsonschema import SchemaError

from concurrence.utils.constants import REPORT_SCHEMA_PATH, STATE_SCHEMA_PATH


class StateValidator:
    """Validates state documents and measure reports against JSON schemas."""

    def __init__(self):
        """Initialize the validator."""
        self._state_schema_cache: dict | None = None
        self._report_schema_cache: dict | None = None

    def validate_state(self, document: Any) -> tuple[bool, list[str]]:
        """
        Validate a raw state document against state-schema.yaml.

        Args:
            document: Parsed YAML/JSON document

        Returns:
            Tuple of (is_valid, error_messages)
        """
        schema = self._load_state_schema()
        return self._validate_against_schema(document, schema)

    def validate_report(self, report: Any) -> tuple[bool, list[str]]:
        """
        Validate a JSON measure report against report-schema.json.

        Args:
            report: Report dictionary (e.g. ``MeasureReport.model_dump()``)

        Returns:
            Tuple of (is_valid, error_messages)
        """
        schema = self._load_report_schema()
        return self._validate_against_schema(report, schema)

    def _validate_against_schema(
        self, data: Any, schema: dict[str, Any]
    ) -> tuple[bool, list[str]]:
        """
        Validate data against a JSON schema.

        Args:
            data: Data to validate
            schema: JSON Schema

        Returns:
            Tuple of (is_valid, error_messages)
        """
        try:
            jsonschema.Draft202012Validator.check_schema(schema)
        except SchemaError as e:
            return False, [f"Invalid schema: {e.message}"]

        validator = jsonschema.Draft202012Validator(schema)
        validation_errors = sorted(validator.iter_errors(data), key=str)
        if not validation_errors:
            return True, []

        errors = []
        for error in validation_errors:
            path = " -> ".join(str(p) for p in error.path) if error.path else "root"
            errors.append(f"[{path}] {error.message}")
        return False, errors

    def _load_state_schema(self) -> dict[str, Any]:
        """
        Load the state schema from state-schema.yaml.

        Raises:
            FileNotFoundError: If schema file doesn't exist
        """
        if self._state_schema_cache is not None:
            return self._state_schema_cache

        if not STATE_SCHEMA_PATH.exists():
            raise FileNotFoundError(f"State schema not found: {STATE_SCHEMA_PATH}")

        with open(STATE_SCHEMA_PATH, "r", encoding="utf-8") as f:
            docs = list(yaml.safe_load_all(f))

        # First document is the schema
        self._state_schema_cache = docs[0] if docs else {}
        return self._state_schema_cache

    def _load_report_schema(self) -> dict[str, Any]:
        """
        Load the report schema from report-schema.json.

        Raises:
            FileNotFoundError: If schema file doesn't exist
        """
        if self._report_schema_cache is not None:
            return self._report_schema_cache

        if not REPORT_SCHEMA_PATH.exists():
            raise FileNotFoundError(f"Report schema not found: {REPORT_SCHEMA_PATH}")

        self._report_schema_cache = json.loads(Path(REPORT_SCHEMA_PATH).read_text(encoding="utf-8"))
        return self._report_schema_cache


# Convenience functions


def validate_state(document: Any) -> tuple[bool, list[str]]:
    """
    Convenience function to validate a raw state document.

    Args:
        document: Parsed state document

    Returns:
        Tuple of (is_valid, error_messages)
    """
    validator = StateValidator()
    return validator.validate_state(document)


def validate_report(report: Any) -> tuple[bool, list[str]]:
    """
    Convenience function to validate a measure report.

    Args:
        report: Report dictionary

    Returns:
        Tuple of (is_valid, error_messages)
    """
    validator = StateValidator()
    return validator.validate_report(report)
