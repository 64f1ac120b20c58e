from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from resetlab.analysis import (
    FixedPointMethod,
    Stability,
    StroboscopicMap,
    classify_stability,
    find_fixed_point,
    iterate_map,
)
from resetlab.dynamics.state import StateVector
from resetlab.errors import NoConvergence, SingularJacobian, ValidationError
from resetlab.models import build_model
from resetlab.resets import LinearMap, ScalarScale
from resetlab.utils.linalg import sup_norm

GAMMAS = (0.3, 0.5, 0.67)
RATES = (0.5, 1.0, 2.0)
PERIODS = (0.5, 1.0, 2.0)
GOMPERTZ_LEVEL = math.exp(math.log(0.67) / (1.0 - math.exp(-1.0)))


def scaled_map(
    name: str, gamma: float, period: float, **params: float
) -> StroboscopicMap:
    return StroboscopicMap(
        build_model(name, **params), ScalarScale(period=period, gamma=gamma)
    )


@pytest.mark.parametrize(
    ("gamma", "alpha", "period"), list(itertools.product(GAMMAS, RATES, PERIODS))
)
def test_gompertz_fixed_point_oracle(gamma: float, alpha: float, period: float) -> None:
    P = scaled_map("gompertz", gamma, period, alpha=alpha)
    report = find_fixed_point(P, StateVector.of(0.5))
    expected = math.exp(math.log(gamma) / (1.0 - math.exp(-alpha * period)))
    assert abs(report.x_star[0] - expected) <= 1e-6
    assert report.residual <= 1e-10


@pytest.mark.parametrize(
    ("gamma", "alpha", "period"), list(itertools.product(GAMMAS, RATES, PERIODS))
)
def test_logistic_fixed_point_oracle(gamma: float, alpha: float, period: float) -> None:
    beta = 0.9
    P = scaled_map("logistic", gamma, period, alpha=alpha, beta=beta)
    report = find_fixed_point(P, StateVector.of(0.5))
    decay = math.exp(-alpha * period)
    if gamma > decay:
        expected = beta * (gamma - decay) / (1.0 - decay)
        assert abs(report.x_star[0] - expected) <= 1e-6
    else:
        assert abs(report.x_star[0]) <= 1e-8


def test_gompertz_stability() -> None:
    report = find_fixed_point(scaled_map("gompertz", 0.67, 1.0), StateVector.of(0.5))
    assert report.x_star[0] == pytest.approx(GOMPERTZ_LEVEL, abs=1e-8)
    assert report.spectral_radius == pytest.approx(math.exp(-1.0), abs=1e-4)
    assert report.classification is Stability.STABLE
    assert report.jacobian.shape == (1, 1)


def test_logistic_stability() -> None:
    P = scaled_map("logistic", 0.67, 1.0, alpha=1.0, beta=0.9)
    report = find_fixed_point(P, StateVector.of(0.5))
    decay = math.exp(-1.0)
    expected = 0.9 * (0.67 - decay) / (1.0 - decay)
    assert report.x_star[0] == pytest.approx(expected, abs=1e-8)
    assert report.spectral_radius == pytest.approx(math.exp(-1.0) / 0.67, abs=1e-4)
    assert report.classification is Stability.STABLE


@pytest.mark.parametrize("method", ["auto", "newton_fd"])
def test_degenerate_logistic_level_is_marginal(method: str) -> None:
    # gamma = exp(-alpha T) merges the positive fixed point into 0.
    P = scaled_map("logistic", math.exp(-1.0), 1.0, alpha=1.0, beta=0.9)
    report = find_fixed_point(P, StateVector.of(0.5), method=method)
    assert report.method is FixedPointMethod.NEWTON_FD
    assert 0.0 <= report.x_star[0] <= 1e-8
    assert report.spectral_radius == pytest.approx(1.0, abs=1e-6)
    assert report.classification is Stability.MARGINAL


def test_picard_and_newton_agree() -> None:
    P = scaled_map("gompertz", 0.5, 1.0)
    tol = 1e-10
    picard = find_fixed_point(P, StateVector.of(2.0), tol=tol, method="picard")
    newton = find_fixed_point(P, StateVector.of(2.0), tol=tol, method="newton_fd")
    assert picard.method is FixedPointMethod.PICARD
    assert newton.method is FixedPointMethod.NEWTON_FD
    assert abs(picard.x_star[0] - newton.x_star[0]) <= 10 * tol
    assert newton.iterations < picard.iterations


def test_auto_switches_to_newton() -> None:
    P = scaled_map("gompertz", 0.5, 1.0)
    report = find_fixed_point(P, StateVector.of(2.0), max_iter=12)
    assert report.method is FixedPointMethod.NEWTON_FD
    assert report.iterations <= 12


def test_stable_fixed_point_attracts_perturbations() -> None:
    P = scaled_map("gompertz", 0.67, 1.0)
    report = find_fixed_point(P, StateVector.of(0.5))
    start = StateVector(report.x_star.values + 1e-3)
    orbit = iterate_map(P, start, 40)
    assert sup_norm(orbit[-1].values - report.x_star.values) <= 1e-10


def test_unstable_fixed_point_repels_perturbations() -> None:
    P = StroboscopicMap(
        build_model("logistic", alpha=1.0, beta=0.9),
        LinearMap(period=1.0, matrix=np.eye(1)),
    )
    report = find_fixed_point(P, StateVector.of(0.0))
    assert report.x_star[0] == 0.0
    assert report.classification is Stability.UNSTABLE
    assert report.one_sided
    orbit = iterate_map(P, StateVector.of(1e-3), 5)
    assert orbit[-1][0] > 1e-2


def test_no_convergence_keeps_best_iterate() -> None:
    P = scaled_map("gompertz", 0.67, 1.0)
    with pytest.raises(NoConvergence) as info:
        find_fixed_point(P, StateVector.of(5.0), max_iter=2, method="picard")
    assert info.value.max_iter == 2
    assert info.value.best is not None


def test_singular_newton_system() -> None:
    P = StroboscopicMap(
        build_model("zero_field", dim=2.0),
        LinearMap(period=1.0, matrix=np.diag([1.0, 0.5])),
    )
    with pytest.raises(SingularJacobian):
        find_fixed_point(P, StateVector.of(0.0, 1.0), method="newton_fd")


def test_invalid_arguments() -> None:
    P = scaled_map("gompertz", 0.67, 1.0)
    with pytest.raises(ValidationError):
        find_fixed_point(P, StateVector.of(0.5), tol=0.0)
    with pytest.raises(ValidationError):
        find_fixed_point(P, StateVector.of(0.5), max_iter=0)
    with pytest.raises(ValueError):
        find_fixed_point(P, StateVector.of(0.5), method="bisection")


@pytest.mark.parametrize(
    ("rho", "expected"),
    [
        (0.5, Stability.STABLE),
        (1.0, Stability.MARGINAL),
        (1.0 + 5e-7, Stability.MARGINAL),
        (1.0 - 2e-6, Stability.STABLE),
        (1.5, Stability.UNSTABLE),
    ],
)
def test_classify_stability(rho: float, expected: Stability) -> None:
    assert classify_stability(rho) is expected
