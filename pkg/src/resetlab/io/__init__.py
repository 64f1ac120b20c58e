"""Configuration parsing and file output."""

from __future__ import annotations

from .config import (
    AnalysisConfig,
    ModelConfig,
    OutputConfig,
    ResetConfig,
    RunConfig,
    load_config,
    parse_config,
)
from .reports import (
    basin_report,
    fixpoint_report,
    simulate_report,
    sweep_report,
    write_basin_csv,
    write_json,
    write_sweep_csv,
)
from .trajectory_csv import read_trajectory, write_trajectory

__all__ = [
    "AnalysisConfig",
    "ModelConfig",
    "OutputConfig",
    "ResetConfig",
    "RunConfig",
    "basin_report",
    "fixpoint_report",
    "load_config",
    "parse_config",
    "read_trajectory",
    "simulate_report",
    "sweep_report",
    "write_basin_csv",
    "write_json",
    "write_sweep_csv",
    "write_trajectory",
]
