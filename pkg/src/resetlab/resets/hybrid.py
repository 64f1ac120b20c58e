"""Hybrid trajectories: flow segments joined by periodic resets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ..dynamics.integrator import IntegratorConfig, TrajectorySegment, integrate
from ..dynamics.state import StateVector
from ..errors import DimensionMismatch, DomainError, ValidationError
from ..logging import get_logger
from ..models.base import ModelSpec
from ..utils.linalg import sup_norm
from .rules import ResetRule, apply_reset

_logger = get_logger("resetlab.hybrid")


class SampleTag(str, Enum):
    """Role of a trajectory sample."""

    FLOW = "flow"
    LEFT_LIMIT = "left_limit"
    POST_RESET = "post_reset"


@dataclass(frozen=True, slots=True)
class HybridSample:
    t: float
    state: StateVector
    tag: SampleTag


@dataclass(frozen=True, slots=True)
class HybridTrajectory:
    """Sampled solution of a reset system.

    Every reset time carries a ``left_limit`` sample immediately followed by a
    ``post_reset`` sample with the identical time stamp.
    """

    samples: tuple[HybridSample, ...]
    reset_times: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.samples:
            raise ValidationError("a trajectory needs at least one sample")
        dims = {sample.state.dim for sample in self.samples}
        if len(dims) != 1:
            raise DimensionMismatch("all samples must share one dimension")

    @property
    def dim(self) -> int:
        return self.samples[0].state.dim

    def tagged(self, tag: SampleTag) -> tuple[HybridSample, ...]:
        return tuple(s for s in self.samples if s.tag is tag)

    def left_limits(self) -> tuple[StateVector, ...]:
        return tuple(s.state for s in self.tagged(SampleTag.LEFT_LIMIT))

    def post_reset_states(self) -> tuple[StateVector, ...]:
        return tuple(s.state for s in self.tagged(SampleTag.POST_RESET))

    @property
    def final_state(self) -> StateVector:
        return self.samples[-1].state

    def stabilized(self, tol: float) -> bool:
        """Return whether the last two post-reset states differ by less than tol."""

        post = self.post_reset_states()
        if len(post) < 2:
            return False
        return sup_norm(post[-1].values - post[-2].values) < tol

    def sup_norm(self) -> float:
        """Largest absolute coordinate over all samples."""

        return max(sup_norm(s.state.values) for s in self.samples)


def _check_inputs(
    model: ModelSpec, x0: StateVector, horizon: float, samples_per_period: int
) -> None:
    x0.require_dim(model.dim)
    if not (math.isfinite(horizon) and horizon > 0):
        raise ValidationError("horizon must be positive and finite")
    if samples_per_period < 2:
        raise ValidationError("samples_per_period must be at least 2")


def simulate_hybrid(
    model: ModelSpec,
    rule: ResetRule,
    x0: StateVector,
    t0: float,
    horizon: float,
    cfg: IntegratorConfig,
    samples_per_period: int,
) -> HybridTrajectory:
    """Simulate flow and periodic resets over ``[t0, t0 + horizon]``.

    The system flows for one period first; the first reset happens at
    ``t0 + T``. Reset times are computed as ``t0 + k * T``. A trailing
    partial period, if any, is integrated without a reset.

    Args:
        model: Vector field.
        rule: Reset rule and period.
        x0: Initial state at ``t0``.
        t0: Start time.
        horizon: Simulated duration, at least one period.
        cfg: Integrator settings.
        samples_per_period: Samples per flow segment including both ends.

    Raises:
        DomainError: With the time and state where integration failed.
    """

    _check_inputs(model, x0, horizon, samples_per_period)
    if rule.dim is not None and rule.dim != model.dim:
        raise DimensionMismatch(
            f"reset acts on dimension {rule.dim}, model {model.name} has {model.dim}"
        )
    period = rule.period
    # Small relative slack so horizons given as k * T count k full periods.
    n_resets = math.floor(horizon / period * (1.0 + 1e-12))
    if n_resets < 1:
        raise ValidationError("horizon must cover at least one reset period")
    t_end = t0 + horizon
    samples: list[HybridSample] = [HybridSample(t0, x0, SampleTag.FLOW)]
    reset_times: list[float] = []
    state = x0
    start = t0
    for k in range(n_resets):
        stop = t0 + (k + 1) * period
        segment = _flow(model, state, start, stop, cfg, samples_per_period, k)
        samples.extend(
            HybridSample(float(t), s, SampleTag.FLOW)
            for t, s in zip(segment.times[1:-1], segment.states[1:-1], strict=True)
        )
        left = segment.final
        state = apply_reset(rule, left)
        samples.append(HybridSample(stop, left, SampleTag.LEFT_LIMIT))
        samples.append(HybridSample(stop, state, SampleTag.POST_RESET))
        reset_times.append(stop)
        _logger.debug("reset applied", period=k + 1, time=stop)
        start = stop
    if t_end > start:
        segment = _flow(model, state, start, t_end, cfg, samples_per_period, n_resets)
        samples.extend(
            HybridSample(float(t), s, SampleTag.FLOW)
            for t, s in zip(segment.times[1:], segment.states[1:], strict=True)
        )
    _logger.info(
        "hybrid simulation finished", model=model.name, resets=len(reset_times)
    )
    return HybridTrajectory(samples=tuple(samples), reset_times=tuple(reset_times))


def simulate_reference(
    model: ModelSpec,
    x0: StateVector,
    t0: float,
    horizon: float,
    cfg: IntegratorConfig,
    n_samples: int,
) -> HybridTrajectory:
    """Simulate the reset-free flow, sampled uniformly."""

    _check_inputs(model, x0, horizon, n_samples)
    segment = _flow(model, x0, t0, t0 + horizon, cfg, n_samples, None)
    samples = tuple(
        HybridSample(float(t), s, SampleTag.FLOW)
        for t, s in zip(segment.times, segment.states, strict=True)
    )
    return HybridTrajectory(samples=samples, reset_times=())


def _flow(
    model: ModelSpec,
    state: StateVector,
    start: float,
    stop: float,
    cfg: IntegratorConfig,
    n_samples: int,
    period_index: int | None,
) -> TrajectorySegment:
    try:
        return integrate(model, state, start, stop, cfg, n_samples)
    except DomainError as exc:
        _logger.warning(
            "flow left the model domain", model=model.name, period=period_index
        )
        if exc.time is None:
            raise exc.with_context(time=start, state=state) from exc
        raise

