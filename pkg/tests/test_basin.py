from __future__ import annotations

import pytest

from resetlab.analysis import (
    BasinGridSpec,
    Region,
    StroboscopicMap,
    basin_scan,
    find_fixed_point,
    map_eval,
)
from resetlab.dynamics.integrator import IntegratorConfig
from resetlab.dynamics.state import StateVector
from resetlab.errors import InvalidTarget, ValidationError
from resetlab.models import build_model
from resetlab.resets import ScalarScale

FAST = IntegratorConfig(rel_tol=1e-9, abs_tol=1e-12)


def scaled_map(name: str, gamma: float) -> StroboscopicMap:
    return StroboscopicMap(
        build_model(name), ScalarScale(period=1.0, gamma=gamma), FAST
    )


def test_cell_centres_and_volume() -> None:
    spec = BasinGridSpec(Region(lo=(0.0, 0.0), hi=(1.0, 2.0)), (2, 4))
    centres = spec.cell_centres()
    assert len(centres) == 8
    assert centres[0].values.tolist() == [0.25, 0.25]
    assert centres[-1].values.tolist() == [0.75, 1.75]
    assert spec.cell_volume == 0.25


def test_gompertz_basin_covers_the_box() -> None:
    P = scaled_map("gompertz", 0.67)
    target = find_fixed_point(P, StateVector.of(0.5), tol=1e-11).x_star
    spec = BasinGridSpec(Region(lo=(0.01,), hi=(10.0,)), (40,))
    grid = basin_scan(P, spec, target, tol=1e-8, max_iter=100)
    assert grid.n_converged == 40
    assert grid.n_invalid == 0
    assert grid.measure == pytest.approx(9.99)


def test_basin_is_independent_of_workers() -> None:
    P = scaled_map("gompertz", 0.67)
    target = find_fixed_point(P, StateVector.of(0.5), tol=1e-11).x_star
    spec = BasinGridSpec(Region(lo=(-1.0,), hi=(3.0,)), (8,))
    serial = basin_scan(P, spec, target, tol=1e-8, max_iter=100)
    pooled = basin_scan(P, spec, target, tol=1e-8, max_iter=100, workers=4)
    assert serial.measure == pooled.measure
    assert serial.cells == pooled.cells
    # the two cells at x < 0 lie outside the Gompertz domain
    assert serial.n_invalid == 2
    assert serial.measure == pytest.approx(3.0)


def test_logistic_zero_is_its_own_fixed_point() -> None:
    P = scaled_map("logistic", 0.67)
    assert map_eval(P, StateVector.of(0.0))[0] == 0.0
    target = find_fixed_point(P, StateVector.of(0.5), tol=1e-11).x_star
    spec = BasinGridSpec(Region(lo=(0.0,), hi=(2.0,)), (10,))
    grid = basin_scan(P, spec, target, tol=1e-8, max_iter=200)
    assert grid.n_converged == 10
    assert grid.measure == pytest.approx(2.0)


def test_logistic_without_positive_fixed_point_drains_to_zero() -> None:
    P = scaled_map("logistic", 0.3)
    spec = BasinGridSpec(Region(lo=(0.0,), hi=(2.0,)), (8,))
    grid = basin_scan(P, spec, StateVector.of(0.0), tol=1e-8, max_iter=400)
    assert grid.n_converged == 8
    assert all(cell.iterations > 0 for cell in grid.cells)


def test_target_must_be_fixed() -> None:
    P = scaled_map("gompertz", 0.67)
    spec = BasinGridSpec(Region(lo=(0.1,), hi=(1.0,)), (4,))
    with pytest.raises(InvalidTarget):
        basin_scan(P, spec, StateVector.of(0.9), tol=1e-8, max_iter=10)


def test_grid_validation() -> None:
    with pytest.raises(ValidationError):
        BasinGridSpec(Region(lo=(0.0,), hi=(1.0,)), (0,))
    with pytest.raises(ValidationError):
        BasinGridSpec(Region(lo=(0.0,), hi=(1.0,)), (2, 2))
