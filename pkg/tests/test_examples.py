from __future__ import annotations

import math

import pytest

from resetlab.examples import college_reset, logistic_reset


def test_logistic_example(capsys: pytest.CaptureFixture[str]) -> None:
    x_star = logistic_reset.main()
    expected = 0.9 * (0.67 - math.exp(-1.0)) / (1.0 - math.exp(-1.0))
    assert x_star == pytest.approx(expected, abs=1e-8)
    assert "Fixpunkt" in capsys.readouterr().out


def test_college_example(capsys: pytest.CaptureFixture[str]) -> None:
    final = college_reset.main()
    assert math.fsum(final) == pytest.approx(1000.0, rel=1e-10)
    assert len(capsys.readouterr().out.splitlines()) == 10
