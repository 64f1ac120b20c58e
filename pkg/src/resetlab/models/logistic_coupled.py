"""Logistic prey ``x`` driving unbounded growth of ``y``.

The carrying capacity and the coupling coefficient are separate parameters
(``beta_cap`` and ``beta_couple``); both default to the same value.
"""

from __future__ import annotations

import numpy as np

from ..typing import FloatArray
from .base import NON_NEGATIVE, UNBOUNDED, ModelSpec, Params, require_positive

PARAMETERS: dict[str, float] = {"alpha": 1.0, "beta_cap": 1.0, "beta_couple": 1.0}


def _rhs(params: Params, x: FloatArray) -> FloatArray:
    alpha = params["alpha"]
    capacity = params["beta_cap"]
    return np.array(
        [
            alpha * x[0] * (1.0 - x[0] / capacity),
            params["beta_couple"] * x[0] * x[1],
        ]
    )


def _equilibria(params: Params) -> tuple[FloatArray, ...]:
    return (np.array([params["beta_cap"], 0.0]),)


def build(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_positive(merged, "alpha", "beta_cap")
    return ModelSpec(
        name="logistic_coupled",
        dim=2,
        params=merged,
        domain=(NON_NEGATIVE, UNBOUNDED),
        rhs=_rhs,
        equilibria_fn=_equilibria,
        equilibrium_sets=("x = 0: line of degenerate unstable equilibria (0, y)",),
        description="x' = alpha x (1 - x / beta_cap), y' = beta_couple x y",
        defaults=PARAMETERS,
        factory=build,
    )
