"""Stroboscopic map analysis: fixed points, contraction, basins and sweeps."""

from __future__ import annotations

from .basin import BasinCell, BasinGrid, BasinGridSpec, basin_scan
from .contraction import ContractionEstimate, Region, estimate_contraction
from .fixed_point import (
    FixedPointMethod,
    FixedPointReport,
    Stability,
    classify_stability,
    find_fixed_point,
)
from .strobe import (
    JacobianEstimate,
    StroboscopicMap,
    iterate_map,
    jacobian_fd,
    map_eval,
)
from .sweep import SweepRow, SweepSpec, SweepTable, SweepTarget, parameter_sweep

__all__ = [
    "BasinCell",
    "BasinGrid",
    "BasinGridSpec",
    "ContractionEstimate",
    "FixedPointMethod",
    "FixedPointReport",
    "JacobianEstimate",
    "Region",
    "Stability",
    "StroboscopicMap",
    "SweepRow",
    "SweepSpec",
    "SweepTable",
    "SweepTarget",
    "basin_scan",
    "classify_stability",
    "estimate_contraction",
    "find_fixed_point",
    "iterate_map",
    "jacobian_fd",
    "map_eval",
    "parameter_sweep",
]
