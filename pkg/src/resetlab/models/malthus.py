"""Exponential growth and decay (Malthus law)."""

from __future__ import annotations

import numpy as np

from ..typing import FloatArray
from .base import UNBOUNDED, ModelSpec, Params, require_positive

PARAMETERS: dict[str, float] = {"alpha": 1.0}


def _decay_rhs(params: Params, x: FloatArray) -> FloatArray:
    result: FloatArray = -params["alpha"] * x
    return result


def _growth_rhs(params: Params, x: FloatArray) -> FloatArray:
    result: FloatArray = params["alpha"] * x
    return result


def _decay_solution(params: Params, x0: FloatArray, t: float) -> FloatArray:
    result: FloatArray = x0 * np.exp(-params["alpha"] * t)
    return result


def _growth_solution(params: Params, x0: FloatArray, t: float) -> FloatArray:
    result: FloatArray = x0 * np.exp(params["alpha"] * t)
    return result


def _origin(params: Params) -> tuple[FloatArray, ...]:
    return (np.zeros(1),)


def build_decay(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_positive(merged, "alpha")
    return ModelSpec(
        name="malthus_decay",
        dim=1,
        params=merged,
        domain=(UNBOUNDED,),
        rhs=_decay_rhs,
        closed_form=_decay_solution,
        equilibria_fn=_origin,
        description="x' = -alpha x",
        defaults=PARAMETERS,
        factory=build_decay,
    )


def build_growth(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_positive(merged, "alpha")
    return ModelSpec(
        name="malthus_growth",
        dim=1,
        params=merged,
        domain=(UNBOUNDED,),
        rhs=_growth_rhs,
        closed_form=_growth_solution,
        equilibria_fn=_origin,
        description="x' = alpha x",
        defaults=PARAMETERS,
        factory=build_growth,
    )
