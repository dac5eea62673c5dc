"""
Qudit Concurrence Toolkit

Entanglement measures of pure two-party states: concurrence by independent
routes, entanglement of formation, Bloch-vector expansions and randomized
property checks.
"""

__version__ = "0.1.0"
__author__ = "Qudit-Concurrence Project"

from .logging import setup_logging, get_logger, DEFAULT_LOGGING_CONFIG
from .exceptions import ConcurrenceError
from .states import PureBipartiteState, make_state, reduced_density, schmidt_spectrum
from .measures import (
    concurrence_2x2,
    concurrence_bloch,
    concurrence_minors,
    concurrence_schmidt,
    full_report,
    von_neumann_entropy,
)

__all__ = [
    "__version__",
    "setup_logging",
    "get_logger",
    "DEFAULT_LOGGING_CONFIG",
    "ConcurrenceError",
    "PureBipartiteState",
    "make_state",
    "reduced_density",
    "schmidt_spectrum",
    "concurrence_2x2",
    "concurrence_bloch",
    "concurrence_minors",
    "concurrence_schmidt",
    "full_report",
    "von_neumann_entropy",
]
