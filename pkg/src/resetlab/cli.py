"""Kommandozeilen-Frontend ``resetlab``.

Exit codes: 0 on success, 1 for configuration and validation errors, 2 for
numerical failures such as domain violations or missing convergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from collections.abc import Sequence
from pathlib import Path

from .analysis.basin import basin_scan
from .analysis.contraction import estimate_contraction
from .analysis.fixed_point import FixedPointMethod, find_fixed_point
from .analysis.sweep import parameter_sweep
from .constants import ExitCode
from .dynamics.state import StateVector
from .errors import ConfigError, DimensionMismatch, ResetLabError, UnsupportedOperation
from .io.config import RunConfig, load_config
from .io.reports import (
    basin_report,
    fixpoint_report,
    simulate_report,
    sweep_report,
    write_basin_csv,
    write_json,
    write_sweep_csv,
)
from .io.trajectory_csv import format_real, write_trajectory
from .logging import configure_logging, get_logger
from .models.registry import available_models, build_model
from .resets.hybrid import simulate_hybrid, simulate_reference

_logger = get_logger("resetlab.cli")

_METHODS = {
    "picard": FixedPointMethod.PICARD,
    "newton": FixedPointMethod.NEWTON_FD,
    "auto": FixedPointMethod.AUTO,
}


def _join(values: Sequence[float] | StateVector, precision: int) -> str:
    return ",".join(format_real(v, precision) for v in values)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", required=True, type=Path, help="TOML-Konfigurationsdatei"
    )
    common.add_argument("--out", type=Path, help="Ausgabeverzeichnis")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Konfigurationswert überschreiben (mehrfach möglich)",
    )
    common.add_argument(
        "--strict",
        action="store_true",
        help="negative Klassen nach dem Auffüllen als Fehler behandeln",
    )
    common.add_argument(
        "--method", choices=sorted(_METHODS), help="Fixpunktverfahren"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="ausführlichere Logs"
    )

    parser = argparse.ArgumentParser(
        prog="resetlab",
        description="Nichtlineare ODE-Systeme mit periodischem Zurücksetzen",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    models = sub.add_parser("models", help="verfügbare Modelle auflisten")
    models.add_argument("-v", "--verbose", action="count", default=0)
    sub.add_parser("simulate", parents=[common], help="hybride Trajektorie rechnen")
    sub.add_parser(
        "fixpoint", parents=[common], help="Fixpunkt der stroboskopischen Abbildung"
    )
    sub.add_parser("basin", parents=[common], help="Einzugsgebiet auf einem Gitter")
    sub.add_parser("sweep", parents=[common], help="Parameterstudie des Fixpunkts")
    return parser


def _load(args: argparse.Namespace) -> RunConfig:
    overrides = list(args.overrides)
    if args.strict:
        overrides.append("reset.strict=true")
    if args.method:
        overrides.append(f'analysis.method="{args.method}"')
    cfg = load_config(args.config, overrides)
    if args.out is not None:
        cfg = dataclasses.replace(
            cfg, output=dataclasses.replace(cfg.output, directory=args.out)
        )
    return cfg


def cmd_models() -> int:
    for name in available_models():
        model = build_model(name)
        params = " ".join(f"{k}={v:g}" for k, v in sorted(model.params.items()))
        print(f"{name}\tdim={model.dim}\t{model.description}\t{params}")
    return ExitCode.OK


def cmd_simulate(cfg: RunConfig) -> int:
    model = cfg.model_spec()
    rule = cfg.reset_rule()
    x0 = cfg.initial_state()
    out = cfg.output.directory
    precision = cfg.output.precision
    trajectory = simulate_hybrid(
        model, rule, x0, cfg.t0, cfg.horizon, cfg.integrator, cfg.samples_per_period
    )
    write_trajectory(out / "trajectory.csv", trajectory, precision)
    stabilized = trajectory.stabilized(cfg.analysis.stabilization_tol)
    document = simulate_report(cfg, trajectory, stabilized)
    if cfg.output.reference:
        periods = math.ceil(cfg.horizon / rule.period)
        n_samples = (cfg.samples_per_period - 1) * periods + 1
        try:
            reference = simulate_reference(
                model, x0, cfg.t0, cfg.horizon, cfg.integrator, n_samples
            )
        except ResetLabError as exc:
            _logger.warning("reference trajectory failed", error=str(exc))
            document["results"]["reference_error"] = str(exc)
        else:
            write_trajectory(out / "reference.csv", reference, precision)
            document["results"]["reference"] = "reference.csv"
    write_json(out / "simulate.json", document)
    post = trajectory.post_reset_states()
    final = post[-1] if post else trajectory.final_state
    print(
        f"final_post_reset={_join(final, precision)} "
        f"stabilized={str(stabilized).lower()}"
    )
    return ExitCode.OK


def cmd_fixpoint(cfg: RunConfig) -> int:
    P = cfg.stroboscopic_map()
    analysis = cfg.analysis
    report = find_fixed_point(
        P,
        cfg.initial_state(),
        tol=analysis.tol,
        max_iter=analysis.max_iter,
        method=analysis.method,
        h_rel=analysis.h_rel,
    )
    region = cfg.region()
    contraction = None
    if region is not None:
        contraction = estimate_contraction(
            P, region, analysis.n_samples, analysis.h_rel
        )
    write_json(
        cfg.output.directory / "fixpoint.json",
        fixpoint_report(cfg, report, contraction),
    )
    line = (
        f"x_star={_join(report.x_star, cfg.output.precision)} "
        f"spectral_radius={report.spectral_radius:.12g} "
        f"classification={report.classification.value}"
    )
    if contraction is not None:
        line += (
            f" l_hat={contraction.l_hat:.12g} "
            f"certified={str(contraction.certified).lower()}"
        )
    print(line)
    return ExitCode.OK


def cmd_basin(cfg: RunConfig) -> int:
    P = cfg.stroboscopic_map()
    analysis = cfg.analysis
    grid_spec = cfg.basin_grid()
    if analysis.target is not None:
        target = StateVector.from_iterable(analysis.target)
    else:
        # Target residual is a tenth of the basin tolerance.
        target = find_fixed_point(
            P,
            cfg.initial_state(),
            tol=analysis.tol / 10,
            max_iter=analysis.max_iter,
            method=analysis.method,
            h_rel=analysis.h_rel,
        ).x_star
    grid = basin_scan(
        P,
        grid_spec,
        target,
        tol=analysis.tol,
        max_iter=analysis.max_iter,
        workers=analysis.workers,
    )
    out = cfg.output.directory
    write_basin_csv(out / "basin.csv", grid, cfg.output.precision)
    write_json(out / "basin.json", basin_report(cfg, grid, "basin.csv"))
    print(
        f"measure={grid.measure:.12g} converged={grid.n_converged} "
        f"invalid={grid.n_invalid} cells={len(grid.cells)}"
    )
    return ExitCode.OK


def cmd_sweep(cfg: RunConfig) -> int:
    analysis = cfg.analysis
    table = parameter_sweep(
        cfg.model_spec(),
        cfg.reset_rule(),
        cfg.sweep_spec(),
        cfg.initial_state(),
        tol=analysis.tol,
        max_iter=analysis.max_iter,
        cfg=cfg.integrator,
        method=analysis.method,
        workers=analysis.workers,
    )
    out = cfg.output.directory
    write_sweep_csv(out / "sweep.csv", table, cfg.output.precision)
    write_json(out / "sweep.json", sweep_report(cfg, table, "sweep.csv"))
    failed = sum(not row.ok for row in table.rows)
    print(f"rows={len(table.rows)} failed={failed}")
    return ExitCode.OK


_COMMANDS = {
    "simulate": cmd_simulate,
    "fixpoint": cmd_fixpoint,
    "basin": cmd_basin,
    "sweep": cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if args.command == "models":
        return cmd_models()
    try:
        cfg = _load(args)
        return _COMMANDS[args.command](cfg)
    except (ConfigError, DimensionMismatch, UnsupportedOperation) as exc:
        print(f"Konfigurationsfehler: {exc}", file=sys.stderr)
        return ExitCode.CONFIG
    except ResetLabError as exc:
        print(f"Numerischer Fehler ({type(exc).__name__}): {exc}", file=sys.stderr)
        return ExitCode.NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
