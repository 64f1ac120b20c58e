"""Synthetic vector field ``x' = 0`` for testing pure reset maps."""

from __future__ import annotations

import numpy as np

from ..errors import ValidationError
from ..typing import FloatArray
from .base import UNBOUNDED, ModelSpec, Params

PARAMETERS: dict[str, float] = {"dim": 1.0}


def _rhs(params: Params, x: FloatArray) -> FloatArray:
    return np.zeros_like(x)


def build(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    dim = merged["dim"]
    if dim != int(dim) or dim < 1:
        raise ValidationError("zero_field dim must be a positive integer")
    return ModelSpec(
        name="zero_field",
        dim=int(dim),
        params=merged,
        domain=(UNBOUNDED,) * int(dim),
        rhs=_rhs,
        equilibrium_sets=("every state is an equilibrium",),
        description="x' = 0 (synthetic)",
        defaults=PARAMETERS,
        factory=build,
    )
