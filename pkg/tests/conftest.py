"""Shared pytest configuration."""

import pytest

from concurrence.logging import setup_logging


@pytest.fixture(autouse=True)
def reset_logging():
    """CLI invocations bind log handlers to CliRunner streams; rebind after each test."""
    yield
    setup_logging()
