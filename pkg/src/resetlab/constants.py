"""Numerical defaults and enumerations shared across the toolkit."""

from __future__ import annotations

from enum import IntEnum
from typing import Final

VERSION: Final[str] = "0.1.0"

DEFAULT_REL_TOL: Final[float] = 1e-10
DEFAULT_ABS_TOL: Final[float] = 1e-12
DEFAULT_FIXED_STEP: Final[float] = 1e-3
# Bounds the step where abs_tol dominates the error norm (states near zero).
DEFAULT_MAX_STEP: Final[float] = 0.05
DEFAULT_SAMPLES_PER_PERIOD: Final[int] = 21

DEFAULT_FIXED_POINT_TOL: Final[float] = 1e-10
DEFAULT_MAX_ITER: Final[int] = 400
DEFAULT_H_REL: Final[float] = 1e-6
STABILITY_MARGIN: Final[float] = 1e-6
SINGULAR_CONDITION: Final[float] = 1e14
MAX_NEWTON_HALVINGS: Final[int] = 30

FRACTION_SUM_TOL: Final[float] = 1e-12
DEFAULT_PRECISION: Final[int] = 17

# Step sizes below this multiple of the spacing at t are not meaningful.
STEP_UNDERFLOW_ULPS: Final[float] = 16.0


class ExitCode(IntEnum):
    """Process exit codes of the command line front end."""

    OK = 0
    CONFIG = 1
    NUMERICAL = 2
