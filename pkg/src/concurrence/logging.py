"""Logging configuration for the concurrence toolkit.

Console output goes to stderr so that JSON reports and CSV data on stdout stay
machine-readable.
"""

import copy
import logging
import logging.config
from typing import Dict, Any


DEFAULT_LOGGING_CONFIG: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        },
        "detailed": {
            "format": "%(asctime)s - %(name)s - %(levelname)s - %(module)s.%(funcName)s:%(lineno)d - %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "DEBUG",
            "formatter": "standard",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        "concurrence": {
            "level": "WARNING",
            "handlers": ["console"],
            "propagate": False,
        },
    },
    "root": {
        "level": "WARNING",
        "handlers": ["console"],
    },
}


def build_logging_config(level: str | None = None, log_file: str | None = None) -> Dict[str, Any]:
    """Derive a logging configuration from the defaults.

    Args:
        level: Level for the ``concurrence`` logger (e.g. ``"DEBUG"``).
        log_file: Optional path of an additional detailed log file.

    Returns:
        A ``dictConfig``-compatible dictionary.
    """
    config = copy.deepcopy(DEFAULT_LOGGING_CONFIG)
    if level:
        config["loggers"]["concurrence"]["level"] = level.upper()
    if log_file:
        config["handlers"]["file"] = {
            "class": "logging.FileHandler",
            "level": "DEBUG",
            "formatter": "detailed",
            "filename": log_file,
            "mode": "a",
        }
        config["loggers"]["concurrence"]["handlers"].append("file")
    return config


def setup_logging(config: Dict[str, Any] | None = None) -> None:
    """Apply ``config`` (the defaults when omitted) with ``dictConfig``.

    Called once per CLI invocation; library code never configures logging.
    """
    logging.config.dictConfig(config or DEFAULT_LOGGING_CONFIG)


def get_logger(name: str) -> logging.Logger:
    """Logger under the ``concurrence`` tree; pass ``__name__``."""
    return logging.getLogger(name)
