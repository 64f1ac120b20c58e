"""Model catalogue."""

from __future__ import annotations

from .base import (
    Bound,
    ModelSpec,
    closed_form_eval,
    equilibria,
    rhs_eval,
)
from .registry import available_models, build_model, register_model

__all__ = [
    "Bound",
    "ModelSpec",
    "available_models",
    "build_model",
    "closed_form_eval",
    "equilibria",
    "register_model",
    "rhs_eval",
]
