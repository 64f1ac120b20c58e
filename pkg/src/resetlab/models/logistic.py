"""One-dimensional logistic growth towards the carrying capacity ``beta``."""

from __future__ import annotations

import numpy as np

from ..typing import FloatArray
from .base import NON_NEGATIVE, ModelSpec, Params, require_positive

PARAMETERS: dict[str, float] = {"alpha": 1.0, "beta": 0.9}


def _rhs(params: Params, x: FloatArray) -> FloatArray:
    alpha = params["alpha"]
    beta = params["beta"]
    result: FloatArray = alpha * x * (1.0 - x / beta)
    return result


def _solution(params: Params, x0: FloatArray, t: float) -> FloatArray:
    alpha = params["alpha"]
    beta = params["beta"]
    result: FloatArray = beta * x0 / (x0 + (beta - x0) * np.exp(-alpha * t))
    return result


def _equilibria(params: Params) -> tuple[FloatArray, ...]:
    return (np.zeros(1), np.array([params["beta"]]))


def build(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_positive(merged, "alpha", "beta")
    return ModelSpec(
        name="logistic",
        dim=1,
        params=merged,
        domain=(NON_NEGATIVE,),
        rhs=_rhs,
        closed_form=_solution,
        equilibria_fn=_equilibria,
        description="x' = alpha x (1 - x / beta)",
        defaults=PARAMETERS,
        factory=build,
    )
