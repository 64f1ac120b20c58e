"""JSON run reports and CSV tables for basin scans and sweeps.

A report is one self-describing document: a ``run`` header (tool, version,
command), the echoed ``inputs`` and the ``results``. Nothing time dependent
is written, so identical configurations give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Any

from ..analysis.basin import BasinGrid
from ..analysis.contraction import ContractionEstimate
from ..analysis.fixed_point import FixedPointReport
from ..analysis.sweep import SweepTable
from ..constants import DEFAULT_PRECISION, VERSION
from ..dynamics.state import StateVector
from ..resets.hybrid import HybridTrajectory
from .config import RunConfig
from .trajectory_csv import format_real


def _real(value: float) -> float | None:
    return value if math.isfinite(value) else None


def _vector(state: StateVector | None) -> list[float] | None:
    return None if state is None else [float(v) for v in state]


def _document(command: str, cfg: RunConfig, results: dict[str, Any]) -> dict[str, Any]:
    return {
        "run": {"tool": "resetlab", "version": VERSION, "command": command},
        "inputs": cfg.echo(),
        "results": results,
    }


def simulate_report(
    cfg: RunConfig, trajectory: HybridTrajectory, stabilized: bool
) -> dict[str, Any]:
    post = trajectory.post_reset_states()
    return _document(
        "simulate",
        cfg,
        {
            "resets": len(trajectory.reset_times),
            "samples": len(trajectory.samples),
            "final_post_reset": _vector(post[-1] if post else None),
            "final_state": _vector(trajectory.final_state),
            "stabilized": stabilized,
            "sup_norm": _real(trajectory.sup_norm()),
        },
    )


def contraction_results(estimate: ContractionEstimate) -> dict[str, Any]:
    return {
        "l_hat": _real(estimate.l_hat),
        "certified": estimate.certified,
        "self_mapping": estimate.self_mapping,
        "valid_samples": estimate.n_valid,
        "invalid_samples": [_vector(p) for p in estimate.invalid],
        "rigorous": estimate.rigorous,
    }


def fixpoint_report(
    cfg: RunConfig,
    report: FixedPointReport,
    contraction: ContractionEstimate | None = None,
) -> dict[str, Any]:
    results: dict[str, Any] = {
        "x_star": _vector(report.x_star),
        "residual": _real(report.residual),
        "iterations": report.iterations,
        "method": report.method.value,
        "jacobian": [[float(v) for v in row] for row in report.jacobian],
        "jacobian_one_sided": report.one_sided,
        "spectral_radius": _real(report.spectral_radius),
        "classification": report.classification.value,
    }
    if contraction is not None:
        results["contraction"] = contraction_results(contraction)
    return _document("fixpoint", cfg, results)


def basin_report(cfg: RunConfig, grid: BasinGrid, table: str) -> dict[str, Any]:
    return _document(
        "basin",
        cfg,
        {
            "target": _vector(grid.target),
            "cells": len(grid.cells),
            "converged": grid.n_converged,
            "invalid": grid.n_invalid,
            "cell_volume": grid.spec.cell_volume,
            "box_volume": grid.spec.region.volume,
            "measure": grid.measure,
            "table": table,
        },
    )


def sweep_report(cfg: RunConfig, table: SweepTable, path: str) -> dict[str, Any]:
    return _document(
        "sweep",
        cfg,
        {
            "param": f"{table.target.value}.{table.param}",
            "rows": [
                {
                    "value": row.value,
                    "x_star": _vector(row.x_star),
                    "spectral_radius": (
                        None
                        if row.spectral_radius is None
                        else _real(row.spectral_radius)
                    ),
                    "classification": (
                        None if row.classification is None else row.classification.value
                    ),
                    "error": row.error,
                }
                for row in table.rows
            ],
            "table": path,
        },
    )


def write_json(path: Path | str, document: dict[str, Any]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(document, indent=2, allow_nan=False)
    target.write_text(text + "\n", encoding="utf-8")
    return target


def _write_rows(path: Path | str, rows: list[list[str]]) -> Path:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(buffer.getvalue(), encoding="utf-8")
    return target


def write_basin_csv(
    path: Path | str, grid: BasinGrid, precision: int = DEFAULT_PRECISION
) -> Path:
    """One row per cell: centre coordinates, converged, iterations, invalid."""

    dim = grid.spec.region.dim
    rows = [[*(f"x{i}" for i in range(dim)), "converged", "iterations", "invalid"]]
    for cell in grid.cells:
        rows.append(
            [
                *(format_real(v, precision) for v in cell.centre),
                str(cell.converged).lower(),
                str(cell.iterations),
                str(cell.invalid).lower(),
            ]
        )
    return _write_rows(path, rows)


def write_sweep_csv(
    path: Path | str, table: SweepTable, precision: int = DEFAULT_PRECISION
) -> Path:
    dims = {row.x_star.dim for row in table.rows if row.x_star is not None}
    dim = dims.pop() if dims else 1
    rows = [
        [
            table.param,
            *(f"x_star{i}" for i in range(dim)),
            "spectral_radius",
            "classification",
            "error",
        ]
    ]
    for row in table.rows:
        if row.x_star is None:
            star = [""] * dim
        else:
            star = [format_real(v, precision) for v in row.x_star]
        rows.append(
            [
                format_real(row.value, precision),
                *star,
                ""
                if row.spectral_radius is None
                else format_real(row.spectral_radius, precision),
                "" if row.classification is None else row.classification.value,
                row.error or "",
            ]
        )
    return _write_rows(path, rows)
