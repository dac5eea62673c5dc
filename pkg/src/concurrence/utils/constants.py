"""
Constants and enumerations for the concurrence toolkit.
"""

import math
from enum import Enum, IntEnum
from pathlib import Path

# ===== Path Definitions =====

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent.parent.parent

# Data directories
SCHEMAS_DIR = PROJECT_ROOT / "schemas"
FIXTURES_DIR = PROJECT_ROOT / "fixtures"

# Schema file paths
STATE_SCHEMA_PATH = SCHEMAS_DIR / "state-schema.yaml"
REPORT_SCHEMA_PATH = SCHEMAS_DIR / "report-schema.json"


# ===== Enumerations =====


class Side(str, Enum):
    """Subsystem of a bipartite state."""

    A = "A"
    B = "B"


class PropertyName(str, Enum):
    """Properties executed by the randomized check suite."""

    ROUTE_AGREEMENT = "route_agreement"
    BLOCH_NORMS = "bloch_norms"
    LOCAL_UNITARY_INVARIANCE = "local_unitary_invariance"
    VIETA = "vieta"
    CUBIC_CONSISTENCY = "cubic_consistency"
    ORACLE_EQUIVALENCE = "oracle_equivalence"
    SCHMIDT_SUM = "schmidt_sum"
    CONCURRENCE_RANGE = "concurrence_range"
    REDUCED_SPECTRA = "reduced_spectra"


class ExitCode(IntEnum):
    """Process exit codes of the CLI."""

    OK = 0
    PROPERTY_FAILURE = 1
    INVALID_INPUT = 2
    IO_ERROR = 3


# ===== Tolerances =====

# Max-norm of M - M^dagger accepted as Hermitian
HERMITICITY_TOLERANCE = 1e-9

# Discriminant slack before a cubic is declared to have complex roots
CUBIC_DISCRIMINANT_TOLERANCE = 1e-9

# Deviation of the amplitude 2-norm from 1 that is silently renormalized
NORM_TOLERANCE = 1e-6

# Floating-point slack on tolerance comparisons of stored values
ROUNDING_SLACK = 1e-12

# Normalization of a stored state / density matrix
STATE_TOLERANCE = 1e-9

# U^dagger U = 1 check
UNITARITY_TOLERANCE = 1e-9

# Negative eigenvalues above -tolerance are clamped to zero
EIGENVALUE_CLAMP_TOLERANCE = 1e-9

# a1^2 + a2^2 + a3^2 = 3 for the diagonal qutrit family
FAMILY_CONSTRAINT_TOLERANCE = 1e-9

# Smallest Schmidt coefficient treated as zero (rank-2 qutrit class)
RANK_TOLERANCE = 1e-9

# Upper-end slack on concurrence and entropy ranges
RANGE_TOLERANCE = 1e-9

# Slack on the rank-2 qutrit concurrence bound sqrt(3)/2
RANK2_BOUND_TOLERANCE = 1e-12

# Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this (relative)
JACOBI_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 100

# Largest local dimension handled by the dense routines
MAX_DIMENSION = 16

# Upper bound of the rank-2 qutrit concurrence
RANK2_MAX_CONCURRENCE = math.sqrt(3.0) / 2.0


# ===== Default Values =====

# Logging level
LOGGING_LEVEL = "WARNING"

# Epsilon sweep grid size
DEFAULT_SWEEP_POINTS = 101

# Significant digits in CSV output
CSV_SIGNIFICANT_DIGITS = 9
CSV_HEADER = ("epsilon", "p_e", "c")

# Randomized check suite
DEFAULT_CHECK_TRIALS = 500
DEFAULT_CHECK_SEED = 7
DEFAULT_CHECK_DIMENSION = 3
DEFAULT_CHECK_WORKERS = 1
MAX_SEED = 2**64 - 1

# Per-property pass thresholds of the check suite
DEFAULT_PROPERTY_TOLERANCE = 1e-9
VIETA_TOLERANCE = 1e-10
