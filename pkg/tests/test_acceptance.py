"""End-to-end scenarios: logistic, college and coupled logistic resets."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np
import pytest

from resetlab.cli import main
from resetlab.dynamics.integrator import IntegratorConfig
from resetlab.dynamics.state import StateVector
from resetlab.models import build_model
from resetlab.resets import (
    LinearMap,
    Replenishment,
    ScalarScale,
    simulate_hybrid,
    simulate_reference,
)
from resetlab.utils.linalg import sup_norm

CFG = IntegratorConfig()


def post_reset_levels(x0: float) -> list[float]:
    model = build_model("logistic", alpha=1.0, beta=0.9)
    rule = ScalarScale(period=1.0, gamma=0.67)
    trajectory = simulate_hybrid(model, rule, StateVector.of(x0), 0.0, 100.0, CFG, 11)
    return [state[0] for state in trajectory.post_reset_states()]


def test_logistic_stabilizes_between_equilibria() -> None:
    levels = post_reset_levels(0.5)
    diffs = [abs(b - a) for a, b in zip(levels, levels[1:], strict=False)]
    assert min(diffs) < 1e-8
    level = levels[-1]
    assert 0.0 < level < 0.9
    assert level > 0.01
    assert 0.9 - level > 0.01
    above = post_reset_levels(1.2)
    assert abs(above[-1] - level) <= 1e-6


def test_college_replenishment_stabilizes() -> None:
    model = build_model("college")
    x0 = StateVector.of(400.0, 300.0, 200.0, 100.0)
    rule = Replenishment.from_initial_state(x0, 1.0)
    trajectory = simulate_hybrid(model, rule, x0, 0.0, 200.0, CFG, 3)
    post = trajectory.post_reset_states()
    for state in post:
        assert math.fsum(state) == pytest.approx(1000.0, rel=1e-10)
    assert sup_norm(post[-1].values - post[-2].values) < 1e-6
    # Without resets the population drains towards the zero equilibrium.
    reference = simulate_reference(model, x0, 0.0, 60.0, CFG, 3)
    flow_state = reference.final_state.values
    assert math.fsum(flow_state) < 1.0
    limit = post[-1].values
    assert sup_norm(limit - flow_state) > 1e-3 * sup_norm(limit)


def test_coupled_logistic_is_bounded_by_resets() -> None:
    model = build_model("logistic_coupled", alpha=0.5, beta_cap=0.5, beta_couple=0.5)
    x0 = StateVector.of(0.3, 0.1)
    free = simulate_reference(model, x0, 0.0, 100.0, CFG, 201)
    assert max(state[1] for state in (s.state for s in free.samples)) > 1e6
    rule = LinearMap(period=1.0, matrix=np.diag([0.67, 0.67]))
    trajectory = simulate_hybrid(model, rule, x0, 0.0, 100.0, CFG, 11)
    assert trajectory.sup_norm() <= 10 * sup_norm(x0.values)
    post = trajectory.post_reset_states()
    assert sup_norm(post[-1].values - post[-2].values) < 1e-5
    decay = math.exp(-0.5)
    x_star = 0.5 * (0.67 - decay) / (1.0 - decay)
    assert post[-1][0] == pytest.approx(x_star, abs=1e-3)
    assert abs(post[-1][1]) < 1e-6


SCENARIOS = {
    "logistic": """\
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
""",
    "college": """\
x0 = [400.0, 300.0, 200.0, 100.0]
horizon = 20.0
samples_per_period = 5

[model]
name = "college"

[reset]
kind = "replenishment"
period = 1.0
""",
    "coupled": """\
x0 = [0.3, 0.1]
horizon = 100.0

[model]
name = "logistic_coupled"
alpha = 0.5
beta_cap = 0.5
beta_couple = 0.5

[reset]
kind = "linear_map"
period = 1.0
matrix = [[0.67, 0.0], [0.0, 0.67]]
""",
}


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_repeated_runs_are_byte_identical(tmp_path: Path, name: str) -> None:
    config = tmp_path / f"{name}.toml"
    config.write_text(SCENARIOS[name], encoding="utf-8")
    outputs = []
    for run in ("first", "second"):
        out = tmp_path / run
        assert main(["simulate", "--config", str(config), "--out", str(out)]) == 0
        outputs.append(
            {p.name: p.read_bytes() for p in sorted(out.iterdir())}
        )
    assert outputs[0] == outputs[1]
    assert set(outputs[0]) == {"simulate.json", "trajectory.csv"}
