"""Runge-Kutta integration of autonomous vector fields.

Two schemes are provided: the classical fixed-step RK4 method and the
Dormand-Prince embedded 5(4) pair with local error control. Dense output is
produced by resampling: the interval is split at uniformly spaced sample
times and every sub-interval is integrated so that its last step lands
exactly on the sample time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..constants import (
    DEFAULT_ABS_TOL,
    DEFAULT_FIXED_STEP,
    DEFAULT_MAX_STEP,
    DEFAULT_REL_TOL,
    STEP_UNDERFLOW_ULPS,
)
from ..errors import DomainError, StepUnderflow, ValidationError
from ..logging import get_logger
from ..typing import DomainGuard, FloatArray, VectorField
from .state import StateVector

_logger = get_logger("resetlab.integrator")


class IntegratorMethod(str, Enum):
    """Available integration schemes."""

    FIXED_RK4 = "fixed_rk4"
    ADAPTIVE = "adaptive_embedded"


@dataclass(frozen=True, slots=True)
class IntegratorConfig:
    """Integrator settings.

    ``h`` is used by the fixed RK4 scheme, the tolerances and ``max_step`` by
    the adaptive scheme.
    """

    method: IntegratorMethod = IntegratorMethod.ADAPTIVE
    h: float = DEFAULT_FIXED_STEP
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    max_step: float = DEFAULT_MAX_STEP

    def __post_init__(self) -> None:
        try:
            method = IntegratorMethod(self.method)
        except ValueError as exc:
            choices = ", ".join(m.value for m in IntegratorMethod)
            raise ValidationError(
                f"unknown integrator method {self.method!r} (choose {choices})"
            ) from exc
        object.__setattr__(self, "method", method)
        self._validate()

    def _validate(self) -> None:
        if not self.h > 0:
            raise ValidationError("integrator step h must be positive")
        if not 0 < self.rel_tol < 1:
            raise ValidationError("rel_tol must lie in (0, 1)")
        if not 0 < self.abs_tol < 1:
            raise ValidationError("abs_tol must lie in (0, 1)")
        if not self.max_step > 0:
            raise ValidationError("max_step must be positive")


@dataclass(frozen=True, slots=True)
class TrajectorySegment:
    """States sampled at strictly increasing times."""

    times: FloatArray
    states: tuple[StateVector, ...]

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=np.float64)
        if times.ndim != 1 or times.size < 2:
            raise ValidationError("a segment needs at least two sample times")
        if len(self.states) != times.size:
            raise ValidationError("times and states must have the same length")
        if not np.all(np.diff(times) > 0):
            raise ValidationError("sample times must be strictly increasing")
        times.setflags(write=False)
        object.__setattr__(self, "times", times)

    @property
    def t_start(self) -> float:
        return float(self.times[0])

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    @property
    def final(self) -> StateVector:
        return self.states[-1]


# Dormand-Prince 5(4) tableau.
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A: tuple[tuple[float, ...], ...] = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = _A[6] + (0.0,)
_E = (
    71 / 57600,
    0.0,
    -71 / 16695,
    71 / 1920,
    -17253 / 339200,
    22 / 525,
    -1 / 40,
)
_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0
_DOMAIN_SHRINK = 0.25


def _evaluate(f: VectorField, t: float, y: FloatArray) -> FloatArray:
    if isinstance(f, DomainGuard):
        f.check_domain(y)
    dy = np.asarray(f(t, y), dtype=np.float64)
    if not np.all(np.isfinite(dy)):
        bad = int(np.flatnonzero(~np.isfinite(dy))[0])
        raise DomainError("vector field is not finite", coordinate=bad, time=t)
    return dy


def _rk4(f: VectorField, t: float, y: FloatArray, h: float) -> FloatArray:
    half = 0.5 * h
    k1 = _evaluate(f, t, y)
    k2 = _evaluate(f, t + half, y + half * k1)
    k3 = _evaluate(f, t + half, y + half * k2)
    k4 = _evaluate(f, t + h, y + h * k3)
    result: FloatArray = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return result


def _dopri(
    f: VectorField, t: float, y: FloatArray, h: float, cfg: IntegratorConfig
) -> tuple[FloatArray, float]:
    stages: list[FloatArray] = []
    for c, row in zip(_C, _A, strict=True):
        if len(row) == 6:
            # Seventh stage is evaluated at the solution itself.
            break
        probe = y.copy()
        for a, k in zip(row, stages, strict=False):
            if a:
                probe += h * a * k
        stages.append(_evaluate(f, t + c * h, probe))
    y_new = y.copy()
    for b, k in zip(_B5, stages, strict=False):
        if b:
            y_new += h * b * k
    stages.append(_evaluate(f, t + h, y_new))
    err_vec = np.zeros_like(y)
    for e, k in zip(_E, stages, strict=True):
        if e:
            err_vec += h * e * k
    scale = cfg.abs_tol + cfg.rel_tol * np.maximum(np.abs(y), np.abs(y_new))
    err = float(np.sqrt(np.mean((err_vec / scale) ** 2)))
    return y_new, err


def _safe_state(y: FloatArray) -> StateVector | None:
    return StateVector(y) if np.all(np.isfinite(y)) else None


def _underflow_limit(t: float, end: float) -> float:
    return STEP_UNDERFLOW_ULPS * float(np.spacing(max(abs(t), abs(end), 1.0)))


def _fixed_interval(
    f: VectorField, a: float, b: float, y: FloatArray, cfg: IntegratorConfig
) -> FloatArray:
    n_steps = max(1, math.ceil((b - a) / cfg.h * (1.0 - 1e-12)))
    step = (b - a) / n_steps
    for k in range(n_steps):
        t = a + k * step
        t_next = b if k == n_steps - 1 else a + (k + 1) * step
        try:
            y = _rk4(f, t, y, t_next - t)
        except DomainError as exc:
            raise exc.with_context(time=t, state=_safe_state(y)) from exc
    return y


def _adaptive_interval(
    f: VectorField,
    a: float,
    b: float,
    y: FloatArray,
    h_proposal: float,
    cfg: IntegratorConfig,
) -> tuple[FloatArray, float]:
    t = a
    while t < b:
        h = min(h_proposal, cfg.max_step)
        clipped = t + h >= b
        if clipped:
            h = b - t
        limit = _underflow_limit(t, b)
        if h < limit:
            raise StepUnderflow(f"step size {h!r} underflowed at t={t!r}")
        try:
            y_new, err = _dopri(f, t, y, h, cfg)
        except DomainError as exc:
            if h * _DOMAIN_SHRINK < limit:
                raise exc.with_context(time=t, state=_safe_state(y)) from exc
            h_proposal = h * _DOMAIN_SHRINK
            continue
        if err <= 1.0:
            t = b if clipped else t + h
            y = y_new
            if not clipped:
                factor = _MAX_FACTOR if err == 0.0 else _SAFETY * err**-0.2
                h_proposal = h * min(_MAX_FACTOR, factor)
        else:
            h_proposal = h * max(_MIN_FACTOR, _SAFETY * err**-0.2)
    return y, h_proposal


def rhs_step_rk4(f: VectorField, t: float, x: StateVector, h: float) -> StateVector:
    """Advance ``x`` by one classical fourth-order Runge-Kutta step.

    Args:
        f: Vector field ``f(t, x)``.
        t: Current time.
        x: Current state.
        h: Positive step size.

    Returns:
        The RK4 update.

    Raises:
        DomainError: If a stage probes a point outside the field's domain.
    """

    if not h > 0:
        raise ValidationError("step size must be positive")
    try:
        return StateVector(_rk4(f, t, x.to_array(), h))
    except DomainError as exc:
        raise exc.with_context(time=t, state=x) from exc


def integrate(
    f: VectorField,
    x0: StateVector,
    t0: float,
    t1: float,
    cfg: IntegratorConfig,
    n_samples: int,
) -> TrajectorySegment:
    """Integrate ``f`` from ``t0`` to ``t1`` and sample uniformly.

    Args:
        f: Autonomous vector field. Fields implementing ``check_domain`` are
            guarded at every stage.
        x0: Initial state.
        t0: Start time.
        t1: End time, strictly greater than ``t0``.
        cfg: Integrator settings.
        n_samples: Number of uniformly spaced samples including both endpoints.

    Returns:
        The sampled trajectory. ``times[-1] == t1`` exactly.

    Raises:
        DomainError: If the trajectory leaves the domain of ``f``.
        StepUnderflow: If the adaptive step size collapses.
    """

    if not t1 > t0:
        raise ValidationError("integration end must exceed start")
    if n_samples < 2:
        raise ValidationError("n_samples must be at least 2")
    times = np.linspace(t0, t1, n_samples)
    y = x0.to_array()
    if isinstance(f, DomainGuard):
        try:
            f.check_domain(y)
        except DomainError as exc:
            raise exc.with_context(time=t0, state=x0) from exc
    states = [x0]
    h_proposal = min(cfg.max_step, t1 - t0)
    for a, b in zip(times[:-1], times[1:], strict=True):
        if cfg.method is IntegratorMethod.FIXED_RK4:
            y = _fixed_interval(f, float(a), float(b), y, cfg)
        else:
            y, h_proposal = _adaptive_interval(
                f, float(a), float(b), y, h_proposal, cfg
            )
        if not np.all(np.isfinite(y)):
            raise DomainError("state is no longer finite", time=float(b))
        states.append(StateVector(y))
    _logger.debug(
        "segment integrated", t0=t0, t1=t1, samples=n_samples, method=cfg.method.value
    )
    return TrajectorySegment(times=times, states=tuple(states))


def flow_map(
    f: VectorField, x: StateVector, duration: float, cfg: IntegratorConfig
) -> StateVector:
    """Return the time-``duration`` flow of ``f`` applied to ``x``."""

    return integrate(f, x, 0.0, duration, cfg, 2).final
