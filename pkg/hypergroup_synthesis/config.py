"""
Configuration for the hypergroup synthesis toolkit.
"""

import os
from enum import Enum, IntEnum

from dotenv import load_dotenv

load_dotenv()


# Box policy for finite-dimensional varieties
class BoxPolicy:
    # initial box N = SCALE * (atom count) + OFFSET
    SCALE = 4
    OFFSET = 4
    MAX_DOUBLINGS = 1


# Error Types
class ErrorType(Enum):
    USAGE = "usage"
    VALIDATION = "validation"
    REJECTION = "rejection"
    INCONCLUSIVE = "inconclusive"
    CHECK_FAILED = "check_failed"


class ExitCode(IntEnum):
    OK = 0
    CHECK_FAILED = 1
    USAGE = 2
    INCONCLUSIVE = 3


VALID_MODES = ("exact", "float")

VALID_EQUATION_KINDS = ("exponential", "sine", "moment", "degree")

VALID_SPEC_KINDS = ("chebyshev", "recurrence1d", "product")


# Configuration
class Config:
    FLOAT_TOLERANCE = float(os.getenv("HYPERGROUP_FLOAT_TOLERANCE", "1e-9"))
    DEFAULT_BOX = int(os.getenv("HYPERGROUP_DEFAULT_BOX", "8"))
    DEFAULT_SEED = int(os.getenv("HYPERGROUP_DEFAULT_SEED", "20240101"))
    JOBS = int(os.getenv("HYPERGROUP_JOBS", "1"))
    DEGREE_TRIALS = int(os.getenv("HYPERGROUP_DEGREE_TRIALS", "16"))
    # the associativity sweep is cubic in the box size
    ASSOCIATIVITY_BOX = int(os.getenv("HYPERGROUP_ASSOCIATIVITY_BOX", "6"))

    # Random rationals p/q with |p|, q <= RATIONAL_BOUND
    RATIONAL_BOUND = 99

    JSON_INDENT = 2
