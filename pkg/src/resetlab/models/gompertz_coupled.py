"""Gompertz-type planar system ``x' = -alpha x ln x``, ``y' = -beta y ln x``."""

from __future__ import annotations

import numpy as np

from ..typing import FloatArray
from .base import POSITIVE, UNBOUNDED, ModelSpec, Params, require_positive
from .gompertz import log_positive

PARAMETERS: dict[str, float] = {"alpha": 1.0, "beta": 1.0}


def _rhs(params: Params, x: FloatArray) -> FloatArray:
    log_x = log_positive(x)
    return np.array([-params["alpha"] * x[0] * log_x, -params["beta"] * x[1] * log_x])


def build(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_positive(merged, "alpha")
    return ModelSpec(
        name="gompertz_coupled",
        dim=2,
        params=merged,
        domain=(POSITIVE, UNBOUNDED),
        rhs=_rhs,
        equilibrium_sets=("x = 1: line of equilibria (1, y)",),
        description="x' = -alpha x ln x, y' = -beta y ln x",
        defaults=PARAMETERS,
        factory=build,
    )
