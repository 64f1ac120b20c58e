from __future__ import annotations

from pathlib import Path

import pytest

from resetlab.analysis import FixedPointMethod
from resetlab.dynamics.integrator import IntegratorMethod
from resetlab.errors import ParseError, ValidationError
from resetlab.io import load_config, parse_config
from resetlab.resets import Replenishment, ScalarScale

LOGISTIC = """\
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
"""


def test_logistic_scenario() -> None:
    cfg = parse_config(LOGISTIC)
    assert cfg.model.name == "logistic"
    assert cfg.model_spec().params["beta"] == 0.9
    rule = cfg.reset_rule()
    assert isinstance(rule, ScalarScale)
    assert rule.gamma == 0.67
    assert cfg.x0 == (0.5,)
    assert cfg.integrator.method is IntegratorMethod.ADAPTIVE
    assert cfg.analysis.method is FixedPointMethod.AUTO
    assert cfg.output.precision == 17


def test_gamma_out_of_range() -> None:
    with pytest.raises(ValidationError, match="gamma"):
        parse_config(LOGISTIC.replace("gamma = 0.67", "gamma = 1.5"))


def test_unknown_model_lists_available() -> None:
    with pytest.raises(ValidationError, match="available"):
        parse_config(LOGISTIC.replace('name = "logistic"', 'name = "verhulst"'))


def test_unknown_key_reports_line() -> None:
    with pytest.raises(ParseError) as info:
        parse_config(LOGISTIC.replace("horizon = 100.0", "horizn = 100.0"))
    assert info.value.key == "horizn"
    assert info.value.line == 2


def test_unknown_model_parameter() -> None:
    with pytest.raises(ValidationError, match="known: alpha, beta"):
        parse_config(LOGISTIC.replace("beta = 0.9", "beta = 0.9\nkappa = 2.0"))


def test_malformed_document() -> None:
    with pytest.raises(ParseError) as info:
        parse_config("x0 = [0.5\n[model]\n")
    assert info.value.line is not None


def test_mistyped_value() -> None:
    with pytest.raises(ParseError) as info:
        parse_config(LOGISTIC.replace("period = 1.0", 'period = "one"'))
    assert info.value.key == "reset.period"
    assert info.value.line == 11


def test_overrides() -> None:
    cfg = parse_config(
        LOGISTIC,
        ["reset.gamma=0.5", "analysis.method=newton", "integrator.method=fixed_rk4"],
    )
    rule = cfg.reset_rule()
    assert isinstance(rule, ScalarScale)
    assert rule.gamma == 0.5
    assert cfg.analysis.method is FixedPointMethod.NEWTON_FD
    assert cfg.integrator.method is IntegratorMethod.FIXED_RK4


def test_override_needs_equals_sign() -> None:
    with pytest.raises(ParseError):
        parse_config(LOGISTIC, ["reset.gamma"])


def test_missing_required_keys() -> None:
    with pytest.raises(ValidationError, match="x0"):
        parse_config(LOGISTIC.replace("x0 = [0.5]\n", ""))
    with pytest.raises(ValidationError, match="reset.period"):
        parse_config(LOGISTIC.replace("period = 1.0\n", ""))


def test_x0_outside_domain() -> None:
    with pytest.raises(ValidationError, match="domain"):
        parse_config(LOGISTIC.replace("x0 = [0.5]", "x0 = [-0.5]"))


def test_replenishment_defaults_to_initial_state() -> None:
    text = """\
x0 = [400.0, 300.0, 200.0, 100.0]

[model]
name = "college"

[reset]
kind = "replenishment"
period = 1.0
strict = true
"""
    rule = parse_config(text).reset_rule()
    assert isinstance(rule, Replenishment)
    assert rule.n0 == 1000.0
    assert rule.strict
    assert rule.fractions.tolist() == [0.4, 0.3, 0.2, 0.1]


def test_linear_map_dimension() -> None:
    text = """\
x0 = [0.3, 0.1]

[model]
name = "logistic_coupled"

[reset]
kind = "linear_map"
period = 1.0
matrix = [[0.67, 0.0, 0.0], [0.0, 0.67, 0.0], [0.0, 0.0, 0.67]]
"""
    with pytest.raises(ValidationError, match="dimension"):
        parse_config(text)


def test_analysis_section() -> None:
    text = LOGISTIC + """
[analysis]
lo = [0.1]
hi = [2.0]
resolution = [20]
workers = 2
sweep_param = "gamma"
sweep_values = [0.5, 0.6]
"""
    cfg = parse_config(text)
    assert cfg.basin_grid().resolution == (20,)
    assert cfg.sweep_spec().values == (0.5, 0.6)
    assert cfg.analysis.workers == 2
    with pytest.raises(ValidationError):
        parse_config(LOGISTIC + "\n[analysis]\nlo = [0.1]\n")


def test_load_config(tmp_path: Path) -> None:
    path = tmp_path / "run.toml"
    path.write_text(LOGISTIC, encoding="utf-8")
    assert load_config(path).model.name == "logistic"
    with pytest.raises(ParseError):
        load_config(tmp_path / "missing.toml")
