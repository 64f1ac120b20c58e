"""One-parameter sweeps of the stroboscopic fixed point."""

from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from ..constants import DEFAULT_FIXED_POINT_TOL, DEFAULT_MAX_ITER
from ..dynamics.integrator import IntegratorConfig
from ..dynamics.state import StateVector
from ..errors import ResetLabError, ValidationError
from ..logging import get_logger
from ..models.base import ModelSpec
from ..resets.rules import ResetRule
from .fixed_point import FixedPointMethod, Stability, find_fixed_point
from .strobe import StroboscopicMap

_logger = get_logger("resetlab.sweep")


class SweepTarget(str, Enum):
    MODEL = "model"
    RESET = "reset"


@dataclass(frozen=True, slots=True)
class SweepSpec:
    """Swept parameter and its values.

    ``param`` is a model parameter or a scalar reset field. A ``model.`` or
    ``reset.`` prefix selects the owner explicitly.
    """

    param: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        if not self.param:
            raise ValidationError("sweep parameter name must not be empty")
        if not values:
            raise ValidationError("sweep needs at least one value")
        if not all(math.isfinite(v) for v in values):
            raise ValidationError("sweep values must be finite")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True, slots=True)
class SweepRow:
    """One sweep entry; ``x_star`` is ``None`` when the solve failed."""

    value: float
    x_star: StateVector | None
    spectral_radius: float | None = None
    classification: Stability | None = None
    iterations: int | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.x_star is not None


@dataclass(frozen=True, slots=True)
class SweepTable:
    param: str
    target: SweepTarget
    rows: tuple[SweepRow, ...] = field(default_factory=tuple)


def resolve_parameter(
    model: ModelSpec, rule: ResetRule, name: str
) -> tuple[SweepTarget, str]:
    """Decide whether ``name`` refers to the model or the reset rule.

    Raises:
        ValidationError: If the name is unknown or matches both owners.
    """

    owner, _, bare = name.rpartition(".")
    in_model = bare in model.params
    in_rule = bare in rule.scalar_parameters()
    if owner == SweepTarget.MODEL.value and in_model:
        return SweepTarget.MODEL, bare
    if owner == SweepTarget.RESET.value and in_rule:
        return SweepTarget.RESET, bare
    if not owner:
        if in_model and in_rule:
            raise ValidationError(
                f"sweep parameter {bare!r} is ambiguous; use model.{bare} or "
                f"reset.{bare}"
            )
        if in_model:
            return SweepTarget.MODEL, bare
        if in_rule:
            return SweepTarget.RESET, bare
    known = sorted(
        [f"model.{p}" for p in model.params]
        + [f"reset.{p}" for p in rule.scalar_parameters()]
    )
    raise ValidationError(
        f"unknown sweep parameter {name!r}; known: {', '.join(known)}"
    )


def _solve_row(
    model: ModelSpec,
    rule: ResetRule,
    target: SweepTarget,
    name: str,
    value: float,
    x0: StateVector,
    tol: float,
    max_iter: int,
    cfg: IntegratorConfig,
    method: FixedPointMethod,
) -> SweepRow:
    try:
        if target is SweepTarget.MODEL:
            P = StroboscopicMap(model.with_params(**{name: value}), rule, cfg)
        else:
            P = StroboscopicMap(model, rule.with_param(name, value), cfg)
        report = find_fixed_point(P, x0, tol=tol, max_iter=max_iter, method=method)
    except ResetLabError as exc:
        _logger.warning("sweep row failed", param=name, value=value, error=str(exc))
        return SweepRow(value=value, x_star=None, error=f"{type(exc).__name__}: {exc}")
    return SweepRow(
        value=value,
        x_star=report.x_star,
        spectral_radius=report.spectral_radius,
        classification=report.classification,
        iterations=report.iterations,
    )


def parameter_sweep(
    model: ModelSpec,
    rule: ResetRule,
    sweep: SweepSpec,
    x0: StateVector,
    tol: float = DEFAULT_FIXED_POINT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    *,
    cfg: IntegratorConfig | None = None,
    method: FixedPointMethod | str = FixedPointMethod.AUTO,
    workers: int = 1,
) -> SweepTable:
    """Compute the fixed point for every value of one parameter.

    Every row starts from ``x0``. Failures are recorded in the row and the
    sweep continues.

    Raises:
        ValidationError: If the parameter name cannot be resolved.
    """

    if workers < 1:
        raise ValidationError("workers must be positive")
    target, name = resolve_parameter(model, rule, sweep.param)
    cfg = cfg or IntegratorConfig()
    method = FixedPointMethod(method)

    def solve(value: float) -> SweepRow:
        return _solve_row(
            model, rule, target, name, value, x0, tol, max_iter, cfg, method
        )

    values: Sequence[float] = sweep.values
    if workers == 1:
        rows = [solve(v) for v in values]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(solve, values))
    _logger.info(
        "sweep finished",
        param=f"{target.value}.{name}",
        rows=len(rows),
        failed=sum(not row.ok for row in rows),
    )
    return SweepTable(param=name, target=target, rows=tuple(rows))
