"""Gompertz growth ``x' = -alpha x ln x`` on ``x > 0``."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..typing import FloatArray
from .base import POSITIVE, ModelSpec, Params, require_positive

PARAMETERS: dict[str, float] = {"alpha": 1.0}


def log_positive(x: FloatArray, coordinate: int = 0) -> float:
    """Natural logarithm of ``x[coordinate]``, which must be positive."""

    value = float(x[coordinate])
    if not value > 0:
        raise DomainError(
            f"logarithm of non-positive value {value!r}", coordinate=coordinate
        )
    return float(np.log(value))


def _rhs(params: Params, x: FloatArray) -> FloatArray:
    return np.array([-params["alpha"] * x[0] * log_positive(x)])


def _solution(params: Params, x0: FloatArray, t: float) -> FloatArray:
    return np.array([np.exp(log_positive(x0) * np.exp(-params["alpha"] * t))])


def _equilibria(params: Params) -> tuple[FloatArray, ...]:
    return (np.ones(1),)


def build(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_positive(merged, "alpha")
    return ModelSpec(
        name="gompertz",
        dim=1,
        params=merged,
        domain=(POSITIVE,),
        rhs=_rhs,
        closed_form=_solution,
        equilibria_fn=_equilibria,
        description="x' = -alpha x ln x",
        defaults=PARAMETERS,
        factory=build,
    )
