"""Flow integration: state vectors and Runge-Kutta solvers."""

from __future__ import annotations

from .integrator import (
    IntegratorConfig,
    IntegratorMethod,
    TrajectorySegment,
    flow_map,
    integrate,
    rhs_step_rk4,
)
from .state import StateVector

__all__ = [
    "IntegratorConfig",
    "IntegratorMethod",
    "StateVector",
    "TrajectorySegment",
    "flow_map",
    "integrate",
    "rhs_step_rk4",
]
