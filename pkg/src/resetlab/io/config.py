"""Run configuration documents.

A run is described by one TOML document. Tables are flattened to dotted keys
(``reset.gamma``, ``model.alpha``) before validation, so the document may use
tables or dotted keys interchangeably::

    x0 = [0.5]
    horizon = 100.0

    [model]
    name = "logistic"
    alpha = 1.0
    beta = 0.9

    [reset]
    kind = "scalar_scale"
    period = 1.0
    gamma = 0.67

Unknown keys are rejected.
"""

from __future__ import annotations

import math
import re
import tomllib
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from ..analysis.basin import BasinGridSpec
from ..analysis.contraction import Region
from ..analysis.fixed_point import FixedPointMethod
from ..analysis.strobe import StroboscopicMap
from ..analysis.sweep import SweepSpec
from ..constants import (
    DEFAULT_FIXED_POINT_TOL,
    DEFAULT_H_REL,
    DEFAULT_MAX_ITER,
    DEFAULT_PRECISION,
    DEFAULT_SAMPLES_PER_PERIOD,
)
from ..dynamics.integrator import IntegratorConfig
from ..dynamics.state import StateVector
from ..errors import ParseError, ValidationError
from ..models.base import ModelSpec
from ..models.registry import build_model
from ..resets.rules import (
    LinearMap,
    Replenishment,
    ResetKind,
    ResetRule,
    ScalarScale,
)

DEFAULT_HORIZON = 100.0
DEFAULT_CONTRACTION_SAMPLES = 200
DEFAULT_STABILIZATION_TOL = 1e-8

_LINE_PATTERN = re.compile(r"line (\d+)")


@dataclass(frozen=True, slots=True)
class ModelConfig:
    name: str
    params: Mapping[str, float] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class ResetConfig:
    """Reset section; which optional fields are required depends on ``kind``."""

    kind: ResetKind
    period: float
    gamma: float | None = None
    matrix: tuple[tuple[float, ...], ...] | None = None
    fractions: tuple[float, ...] | None = None
    n0: float | None = None
    strict: bool = False


@dataclass(frozen=True, slots=True)
class AnalysisConfig:
    tol: float = DEFAULT_FIXED_POINT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    method: FixedPointMethod = FixedPointMethod.AUTO
    h_rel: float = DEFAULT_H_REL
    target: tuple[float, ...] | None = None
    lo: tuple[float, ...] | None = None
    hi: tuple[float, ...] | None = None
    resolution: tuple[int, ...] | None = None
    n_samples: int = DEFAULT_CONTRACTION_SAMPLES
    sweep_param: str | None = None
    sweep_values: tuple[float, ...] = ()
    workers: int = 1
    stabilization_tol: float = DEFAULT_STABILIZATION_TOL

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValidationError("analysis.tol must be positive")
        if self.max_iter < 1:
            raise ValidationError("analysis.max_iter must be positive")
        if not self.h_rel > 0:
            raise ValidationError("analysis.h_rel must be positive")
        if self.n_samples < 1:
            raise ValidationError("analysis.n_samples must be positive")
        if self.workers < 1:
            raise ValidationError("analysis.workers must be positive")
        if not self.stabilization_tol > 0:
            raise ValidationError("analysis.stabilization_tol must be positive")
        if (self.lo is None) != (self.hi is None):
            raise ValidationError("analysis.lo and analysis.hi must be given together")


@dataclass(frozen=True, slots=True)
class OutputConfig:
    directory: Path = Path("resetlab-out")
    precision: int = DEFAULT_PRECISION
    reference: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.precision <= 17:
            raise ValidationError("output.precision must lie in [1, 17]")


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Validated description of one run.

    Construction resolves the model and the reset rule, so an instance always
    refers to an existing model with valid parameters and a valid rule.
    """

    model: ModelConfig
    reset: ResetConfig
    x0: tuple[float, ...]
    t0: float = 0.0
    horizon: float = DEFAULT_HORIZON
    samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD
    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.horizon) and self.horizon > 0):
            raise ValidationError("horizon must be positive and finite")
        if not math.isfinite(self.t0):
            raise ValidationError("t0 must be finite")
        if self.samples_per_period < 2:
            raise ValidationError("samples_per_period must be at least 2")
        model = self.model_spec()
        state = self.initial_state()
        state.require_dim(model.dim)
        if not model.in_domain(state):
            raise ValidationError(f"x0 lies outside the domain of {model.name}")
        rule = self.reset_rule()
        if rule.dim is not None and rule.dim != model.dim:
            raise ValidationError(
                f"reset acts on dimension {rule.dim}, model {model.name} has "
                f"{model.dim}"
            )
        for name, vector in (
            ("analysis.target", self.analysis.target),
            ("analysis.lo", self.analysis.lo),
            ("analysis.hi", self.analysis.hi),
            ("analysis.resolution", self.analysis.resolution),
        ):
            if vector is not None and len(vector) != model.dim:
                raise ValidationError(f"{name} needs {model.dim} entries")

    def model_spec(self) -> ModelSpec:
        return build_model(self.model.name, **self.model.params)

    def initial_state(self) -> StateVector:
        return StateVector(np.array(self.x0, dtype=np.float64))

    def reset_rule(self) -> ResetRule:
        """Build the configured reset rule.

        Replenishment without ``fractions`` and ``n0`` uses the composition
        and the total of ``x0``.
        """

        section = self.reset
        if section.kind is ResetKind.SCALAR_SCALE:
            if section.gamma is None:
                raise ValidationError("reset.gamma is required for scalar_scale")
            return ScalarScale(period=section.period, gamma=section.gamma)
        if section.kind is ResetKind.LINEAR_MAP:
            if section.matrix is None:
                raise ValidationError("reset.matrix is required for linear_map")
            return LinearMap(period=section.period, matrix=np.array(section.matrix))
        if section.fractions is None and section.n0 is None:
            return Replenishment.from_initial_state(
                self.initial_state(), section.period, strict=section.strict
            )
        if section.fractions is None or section.n0 is None:
            raise ValidationError("reset.fractions and reset.n0 must be given together")
        return Replenishment(
            period=section.period,
            fractions=np.array(section.fractions),
            n0=section.n0,
            strict=section.strict,
        )

    def stroboscopic_map(self) -> StroboscopicMap:
        return StroboscopicMap(self.model_spec(), self.reset_rule(), self.integrator)

    def region(self) -> Region | None:
        if self.analysis.lo is None or self.analysis.hi is None:
            return None
        return Region(lo=self.analysis.lo, hi=self.analysis.hi)

    def basin_grid(self) -> BasinGridSpec:
        region = self.region()
        if region is None or self.analysis.resolution is None:
            raise ValidationError(
                "basin needs analysis.lo, analysis.hi and analysis.resolution"
            )
        return BasinGridSpec(region=region, resolution=self.analysis.resolution)

    def sweep_spec(self) -> SweepSpec:
        if self.analysis.sweep_param is None:
            raise ValidationError("sweep needs analysis.sweep_param")
        return SweepSpec(
            param=self.analysis.sweep_param, values=self.analysis.sweep_values
        )

    def echo(self) -> dict[str, Any]:
        """Return the configuration as plain data for reports."""

        return {
            "model": {"name": self.model.name, **dict(self.model.params)},
            "reset": {
                key: value
                for key, value in (
                    ("kind", self.reset.kind.value),
                    ("period", self.reset.period),
                    ("gamma", self.reset.gamma),
                    ("matrix", _listify(self.reset.matrix)),
                    ("fractions", _listify(self.reset.fractions)),
                    ("n0", self.reset.n0),
                    ("strict", self.reset.strict),
                )
                if value is not None
            },
            "x0": list(self.x0),
            "t0": self.t0,
            "horizon": self.horizon,
            "samples_per_period": self.samples_per_period,
            "integrator": {
                "method": self.integrator.method.value,
                "h": self.integrator.h,
                "rel_tol": self.integrator.rel_tol,
                "abs_tol": self.integrator.abs_tol,
                "max_step": self.integrator.max_step,
            },
            "analysis": {
                key: _listify(value)
                for key, value in (
                    ("tol", self.analysis.tol),
                    ("max_iter", self.analysis.max_iter),
                    ("method", self.analysis.method.value),
                    ("h_rel", self.analysis.h_rel),
                    ("target", self.analysis.target),
                    ("lo", self.analysis.lo),
                    ("hi", self.analysis.hi),
                    ("resolution", self.analysis.resolution),
                    ("n_samples", self.analysis.n_samples),
                    ("sweep_param", self.analysis.sweep_param),
                    ("sweep_values", self.analysis.sweep_values or None),
                    ("workers", self.analysis.workers),
                    ("stabilization_tol", self.analysis.stabilization_tol),
                )
                if value is not None
            },
        }


def _listify(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_listify(item) for item in value]
    return value


def _flatten(table: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in table.items():
        dotted = f"{prefix}{key}"
        if isinstance(value, Mapping):
            flat.update(_flatten(value, f"{dotted}."))
        else:
            flat[dotted] = value
    return flat


def _parse_value(raw: str) -> Any:
    try:
        return tomllib.loads(f"value = {raw}")["value"]
    except tomllib.TOMLDecodeError:
        # Bare words such as model.name=gompertz.
        return raw.strip()


def _apply_overrides(flat: dict[str, Any], overrides: Iterable[str]) -> None:
    for item in overrides:
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ParseError(f"override {item!r} is not of the form key=value")
        flat[key] = _parse_value(raw)


def _locate(text: str, key: str) -> int | None:
    leaf = re.escape(key.rpartition(".")[2])
    pattern = re.compile(rf"^\s*(?:[\w.\"]+\.)?{leaf}\s*=")
    for number, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return number
    return None


class _Reader:
    """Consumes flattened keys and converts them to typed values."""

    def __init__(self, flat: dict[str, Any], text: str) -> None:
        self._flat = flat
        self._text = text

    def _fail(self, key: str, message: str) -> ParseError:
        return ParseError(message, line=_locate(self._text, key), key=key)

    def has(self, key: str) -> bool:
        return key in self._flat

    def pop_raw(self, key: str) -> Any:
        return self._flat.pop(key)

    def keys_with_prefix(self, prefix: str) -> list[str]:
        return sorted(k for k in self._flat if k.startswith(prefix))

    def optional_number(self, key: str) -> float | None:
        if key not in self._flat:
            return None
        value = self._flat.pop(key)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self._fail(key, f"expected a number, got {value!r}")
        return float(value)

    def number(self, key: str, default: float | None = None) -> float:
        value = self.optional_number(key)
        if value is not None:
            return value
        if default is None:
            raise ValidationError(f"missing required key {key}")
        return default

    def integer(self, key: str, default: int) -> int:
        if key not in self._flat:
            return default
        value = self._flat.pop(key)
        if isinstance(value, bool) or not isinstance(value, int):
            raise self._fail(key, f"expected an integer, got {value!r}")
        return value

    def string(self, key: str, default: str | None = None) -> str | None:
        if key not in self._flat:
            return default
        value = self._flat.pop(key)
        if not isinstance(value, str):
            raise self._fail(key, f"expected a string, got {value!r}")
        return value

    def boolean(self, key: str, default: bool) -> bool:
        if key not in self._flat:
            return default
        value = self._flat.pop(key)
        if not isinstance(value, bool):
            raise self._fail(key, f"expected true or false, got {value!r}")
        return value

    def vector(self, key: str) -> tuple[float, ...] | None:
        if key not in self._flat:
            return None
        value = self._flat.pop(key)
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            value = [value]
        if not isinstance(value, Sequence) or isinstance(value, str):
            raise self._fail(key, f"expected a list of numbers, got {value!r}")
        return tuple(self._scalar(key, item) for item in value)

    def int_vector(self, key: str) -> tuple[int, ...] | None:
        if key not in self._flat:
            return None
        value = self._flat.pop(key)
        if isinstance(value, int) and not isinstance(value, bool):
            value = [value]
        if not isinstance(value, Sequence) or isinstance(value, str):
            raise self._fail(key, f"expected a list of integers, got {value!r}")
        result = []
        for item in value:
            if isinstance(item, bool) or not isinstance(item, int):
                raise self._fail(key, f"expected integers, got {item!r}")
            result.append(item)
        return tuple(result)

    def matrix(self, key: str) -> tuple[tuple[float, ...], ...] | None:
        if key not in self._flat:
            return None
        value = self._flat.pop(key)
        if not isinstance(value, Sequence) or isinstance(value, str):
            raise self._fail(key, "expected a list of rows")
        rows = []
        for row in value:
            if not isinstance(row, Sequence) or isinstance(row, str):
                raise self._fail(key, "expected a list of rows")
            rows.append(tuple(self._scalar(key, item) for item in row))
        return tuple(rows)

    def _scalar(self, key: str, item: Any) -> float:
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise self._fail(key, f"expected numbers, got {item!r}")
        return float(item)

    def reject_leftovers(self) -> None:
        if self._flat:
            key = sorted(self._flat)[0]
            others = len(self._flat) - 1
            suffix = f" (and {others} more)" if others else ""
            raise self._fail(key, f"unknown configuration key{suffix}")


def _read_model(reader: _Reader) -> ModelConfig:
    name = reader.string("model.name")
    if name is None:
        raise ValidationError("missing required key model.name")
    params: dict[str, float] = {}
    for key in reader.keys_with_prefix("model."):
        value = reader.number(key)
        params[key.removeprefix("model.")] = value
    return ModelConfig(name=name, params=params)


def _read_reset(reader: _Reader) -> ResetConfig:
    kind = reader.string("reset.kind")
    if kind is None:
        raise ValidationError("missing required key reset.kind")
    try:
        reset_kind = ResetKind(kind)
    except ValueError as exc:
        choices = ", ".join(k.value for k in ResetKind)
        raise ValidationError(
            f"unknown reset kind {kind!r} (choose {choices})"
        ) from exc
    return ResetConfig(
        kind=reset_kind,
        period=reader.number("reset.period"),
        gamma=reader.optional_number("reset.gamma"),
        matrix=reader.matrix("reset.matrix"),
        fractions=reader.vector("reset.fractions"),
        n0=reader.optional_number("reset.n0"),
        strict=reader.boolean("reset.strict", False),
    )


def _read_integrator(reader: _Reader) -> IntegratorConfig:
    defaults = IntegratorConfig()
    method = reader.string("integrator.method", defaults.method.value)
    return IntegratorConfig(
        method=method,  # type: ignore[arg-type]
        h=reader.number("integrator.h", defaults.h),
        rel_tol=reader.number("integrator.rel_tol", defaults.rel_tol),
        abs_tol=reader.number("integrator.abs_tol", defaults.abs_tol),
        max_step=reader.number("integrator.max_step", defaults.max_step),
    )


def _read_analysis(reader: _Reader) -> AnalysisConfig:
    defaults = AnalysisConfig()
    method = reader.string("analysis.method", defaults.method.value)
    try:
        fixed_point_method = FixedPointMethod(
            "newton_fd" if method == "newton" else method
        )
    except ValueError as exc:
        raise ValidationError(
            f"unknown analysis.method {method!r} (choose picard, newton, auto)"
        ) from exc
    return AnalysisConfig(
        tol=reader.number("analysis.tol", defaults.tol),
        max_iter=reader.integer("analysis.max_iter", defaults.max_iter),
        method=fixed_point_method,
        h_rel=reader.number("analysis.h_rel", defaults.h_rel),
        target=reader.vector("analysis.target"),
        lo=reader.vector("analysis.lo"),
        hi=reader.vector("analysis.hi"),
        resolution=reader.int_vector("analysis.resolution"),
        n_samples=reader.integer("analysis.n_samples", defaults.n_samples),
        sweep_param=reader.string("analysis.sweep_param"),
        sweep_values=reader.vector("analysis.sweep_values") or (),
        workers=reader.integer("analysis.workers", defaults.workers),
        stabilization_tol=reader.number(
            "analysis.stabilization_tol", defaults.stabilization_tol
        ),
    )


def _read_output(reader: _Reader) -> OutputConfig:
    defaults = OutputConfig()
    directory = reader.string("output.directory")
    return OutputConfig(
        directory=Path(directory) if directory is not None else defaults.directory,
        precision=reader.integer("output.precision", defaults.precision),
        reference=reader.boolean("output.reference", defaults.reference),
    )


def parse_config(text: str, overrides: Iterable[str] = ()) -> RunConfig:
    """Parse and validate a TOML run configuration.

    Args:
        text: TOML document.
        overrides: ``key=value`` strings applied after parsing; values use
            TOML syntax, bare words are taken as strings.

    Raises:
        ParseError: On malformed TOML, mistyped values and unknown keys.
        ValidationError: If a value violates a model, reset or analysis
            invariant.
    """

    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        line = getattr(exc, "lineno", None)
        if line is None:
            match = _LINE_PATTERN.search(str(exc))
            line = int(match.group(1)) if match else None
        raise ParseError(str(exc), line=line) from exc
    flat = _flatten(document)
    _apply_overrides(flat, overrides)
    reader = _Reader(flat, text)
    x0 = reader.vector("x0")
    if x0 is None:
        raise ValidationError("missing required key x0")
    model = _read_model(reader)
    reset = _read_reset(reader)
    t0 = reader.number("t0", 0.0)
    horizon = reader.number("horizon", DEFAULT_HORIZON)
    samples = reader.integer("samples_per_period", DEFAULT_SAMPLES_PER_PERIOD)
    integrator = _read_integrator(reader)
    analysis = _read_analysis(reader)
    output = _read_output(reader)
    reader.reject_leftovers()
    return RunConfig(
        model=model,
        reset=reset,
        x0=x0,
        t0=t0,
        horizon=horizon,
        samples_per_period=samples,
        integrator=integrator,
        analysis=analysis,
        output=output,
    )


def load_config(path: Path | str, overrides: Iterable[str] = ()) -> RunConfig:
    """Read ``path`` and parse it with :func:`parse_config`."""

    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read configuration {path}: {exc}") from exc
    return parse_config(text, overrides)
