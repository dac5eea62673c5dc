"""
Loader for YAML state files, built-in fixtures and check configurations.

State files hold one state per YAML document; JSON files are read through
the same parser. Documents are validated against state-schema.yaml before
being parsed into StateFile models.
"""

from pathlib import Path
from typing import Any, Union

import yaml

from concurrence.config.models import CheckConfig, StateFile
from concurrence.config.validator import StateValidator
from concurrence.exceptions import StateFileError
from concurrence.logging import get_logger
from concurrence.utils.constants import FIXTURES_DIR

logger = get_logger(__name__)


class StateLoader:
    """Loads and parses state files and check configurations."""

    def __init__(self, validator: StateValidator | None = None):
        """Initialize the loader."""
        self.validator = validator or StateValidator()

    def load_states(self, path: str | Path) -> list[StateFile]:
        """
        Load every state stored in a YAML (or JSON) file.

        Args:
            path: Path to the state file

        Returns:
            One StateFile per document, in file order

        Raises:
            FileNotFoundError: If the file doesn't exist
            yaml.YAMLError: If the YAML is invalid
            StateFileError: If a document violates the state schema
            ValidationError: If a document fails model validation
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"State file not found: {path}")

        docs = self._load_yaml_file(path)
        if not isinstance(docs, list):
            docs = [docs]

        states = []
        for index, doc in enumerate(docs):
            is_valid, errors = self.validator.validate_state(doc)
            if not is_valid:
                raise StateFileError(
                    f"{path} (document {index + 1}) violates the state schema", errors
                )
            states.append(StateFile(**doc))

        logger.debug("Loaded %d state(s) from %s", len(states), path)
        return states

    def load_state(self, path: str | Path) -> StateFile:
        """
        Load the first state stored in a file.

        Args:
            path: Path to the state file

        Returns:
            Validated StateFile instance
        """
        return self.load_states(path)[0]

    def load_fixture(self, fixture_name: str) -> StateFile:
        """
        Load a built-in state fixture.

        Args:
            fixture_name: Name of the fixture (e.g., 'maximally-entangled')

        Returns:
            Validated StateFile instance

        Raises:
            FileNotFoundError: If fixture doesn't exist
        """
        fixture_path = FIXTURES_DIR / f"{fixture_name}.yaml"
        if not fixture_path.exists():
            raise FileNotFoundError(f"Fixture not found: {fixture_name}")

        return self.load_state(fixture_path)

    def list_fixtures(self) -> list[str]:
        """
        List all available fixtures.

        Returns:
            List of fixture names (without .yaml extension)
        """
        if not FIXTURES_DIR.exists():
            return []

        return sorted(f.stem for f in FIXTURES_DIR.glob("*.yaml"))

    def load_check_config(self, path: str | Path, **overrides: Any) -> CheckConfig:
        """
        Load check suite settings from a YAML file.

        Args:
            path: Path to the YAML file (keys: trials, seed, d, workers)
            **overrides: Values that take precedence over the file; None is ignored

        Returns:
            Validated CheckConfig instance
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Check config not found: {path}")

        doc = self._load_yaml_file(path)
        if isinstance(doc, list):
            doc = doc[0]
        if not isinstance(doc, dict):
            raise ValueError(f"Check config must be a mapping: {path}")

        # Accept either a bare mapping or one nested under 'check'
        settings = dict(doc.get("check", doc))
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return CheckConfig(**settings)

    def _load_yaml_file(self, path: Path) -> Union[Any, list[Any]]:
        """
        Load YAML file, handling multi-document files.

        Args:
            path: Path to YAML file

        Returns:
            Single document for single-document files, list for multi-document files

        Raises:
            yaml.YAMLError: If YAML is invalid
        """
        with open(path, "r", encoding="utf-8") as f:
            docs = list(yaml.safe_load_all(f))

        # Filter out None documents (trailing --- can create empty documents)
        docs = [doc for doc in docs if doc is not None]

        if len(docs) == 0:
            raise ValueError(f"Empty YAML file: {path}")
        elif len(docs) == 1:
            return docs[0]
        else:
            return docs


# Convenience functions


def load_state(path: str | Path) -> StateFile:
    """
    Convenience function to load a state file.

    Args:
        path: Path to state YAML file

    Returns:
        Validated StateFile instance
    """
    loader = StateLoader()
    return loader.load_state(path)


def load_fixture(fixture_name: str) -> StateFile:
    """
    Convenience function to load a built-in fixture.

    Args:
        fixture_name: Fixture name (e.g., 'singlet')

    Returns:
        Validated StateFile instance
    """
    loader = StateLoader()
    return loader.load_fixture(fixture_name)


def list_fixtures() -> list[str]:
    """
    Convenience function to list available fixtures.

    Returns:
        List of fixture names
    """
    loader = StateLoader()
    return loader.list_fixtures()
