"""Simulation und Analyse nichtlinearer ODE-Systeme mit periodischem Zurücksetzen."""

from __future__ import annotations

from .analysis.basin import BasinGrid, BasinGridSpec, basin_scan
from .analysis.contraction import ContractionEstimate, Region, estimate_contraction
from .analysis.fixed_point import FixedPointMethod, FixedPointReport, find_fixed_point
from .analysis.strobe import StroboscopicMap, iterate_map, jacobian_fd, map_eval
from .analysis.sweep import SweepSpec, parameter_sweep
from .constants import VERSION
from .dynamics.integrator import IntegratorConfig, IntegratorMethod, integrate
from .dynamics.state import StateVector
from .models.registry import available_models, build_model
from .resets.hybrid import HybridTrajectory, simulate_hybrid, simulate_reference
from .resets.rules import LinearMap, Replenishment, ScalarScale, apply_reset

__all__ = [
    "BasinGrid",
    "BasinGridSpec",
    "ContractionEstimate",
    "FixedPointMethod",
    "FixedPointReport",
    "HybridTrajectory",
    "IntegratorConfig",
    "IntegratorMethod",
    "LinearMap",
    "Region",
    "Replenishment",
    "ScalarScale",
    "StateVector",
    "StroboscopicMap",
    "SweepSpec",
    "apply_reset",
    "available_models",
    "basin_scan",
    "build_model",
    "estimate_contraction",
    "find_fixed_point",
    "integrate",
    "iterate_map",
    "jacobian_fd",
    "map_eval",
    "parameter_sweep",
    "simulate_hybrid",
    "simulate_reference",
]

__version__ = VERSION
