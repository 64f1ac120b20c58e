from __future__ import annotations

import math

import numpy as np
import pytest

from resetlab.dynamics.state import StateVector
from resetlab.errors import (
    DimensionMismatch,
    NegativePopulationError,
    NegativePopulationWarning,
    ValidationError,
)
from resetlab.resets import LinearMap, Replenishment, ScalarScale, apply_reset


def test_scalar_scale() -> None:
    rule = ScalarScale(period=1.0, gamma=0.67)
    assert apply_reset(rule, StateVector.of(1.0, 2.0)).values.tolist() == [0.67, 1.34]
    assert rule.dim is None


@pytest.mark.parametrize("gamma", [0.0, 1.0, 1.5, -0.2])
def test_scalar_scale_range(gamma: float) -> None:
    with pytest.raises(ValidationError):
        ScalarScale(period=1.0, gamma=gamma)


@pytest.mark.parametrize("period", [0.0, -1.0, math.inf])
def test_period_must_be_positive(period: float) -> None:
    with pytest.raises(ValidationError):
        ScalarScale(period=period, gamma=0.5)


def test_linear_map() -> None:
    rule = LinearMap(period=1.0, matrix=np.array([[0.0, 1.0], [2.0, 0.0]]))
    assert apply_reset(rule, StateVector.of(3.0, 4.0)).values.tolist() == [4.0, 6.0]
    with pytest.raises(DimensionMismatch):
        apply_reset(rule, StateVector.of(1.0))
    with pytest.raises(ValidationError):
        LinearMap(period=1.0, matrix=np.ones((2, 3)))


def test_replenishment_restores_total() -> None:
    rule = Replenishment(
        period=1.0, fractions=np.array([0.4, 0.3, 0.2, 0.1]), n0=1000.0
    )
    x_plus = apply_reset(rule, StateVector.of(300.0, 250.0, 150.0, 80.0))
    assert math.fsum(x_plus) == pytest.approx(1000.0, rel=1e-15)
    deficit = 1000.0 - 780.0
    assert x_plus[1] == pytest.approx(250.0 + 0.3 * deficit)


def test_replenishment_from_initial_state() -> None:
    x0 = StateVector.of(400.0, 300.0, 200.0, 100.0)
    rule = Replenishment.from_initial_state(x0, 1.0)
    assert rule.n0 == 1000.0
    assert rule.fractions.tolist() == [0.4, 0.3, 0.2, 0.1]
    assert apply_reset(rule, x0) == x0


def test_replenishment_validation() -> None:
    with pytest.raises(ValidationError):
        Replenishment(period=1.0, fractions=np.array([0.5, 0.4]), n0=1.0)
    with pytest.raises(ValidationError):
        Replenishment(period=1.0, fractions=np.array([1.2, -0.2]), n0=1.0)
    with pytest.raises(ValidationError):
        Replenishment(period=1.0, fractions=np.array([0.5, 0.5]), n0=0.0)


def test_negative_replenishment_warns_or_raises() -> None:
    x_minus = StateVector.of(0.1, 2.0)
    lenient = Replenishment(period=1.0, fractions=np.array([1.0, 0.0]), n0=1.0)
    with pytest.warns(NegativePopulationWarning):
        x_plus = apply_reset(lenient, x_minus)
    assert x_plus[0] == pytest.approx(-1.0)
    strict = Replenishment(
        period=1.0, fractions=np.array([1.0, 0.0]), n0=1.0, strict=True
    )
    with pytest.raises(NegativePopulationError):
        apply_reset(strict, x_minus)


def test_with_param_replaces_scalar_fields() -> None:
    rule = ScalarScale(period=1.0, gamma=0.5)
    assert rule.scalar_parameters() == ("period", "gamma")
    assert rule.with_param("gamma", 0.7).gamma == 0.7
    assert rule.with_param("period", 2.0).period == 2.0
    with pytest.raises(ValidationError):
        rule.with_param("gamma", 2.0)
    with pytest.raises(ValidationError):
        rule.with_param("matrix", 1.0)
