"""Reset rules and hybrid simulation."""

from __future__ import annotations

from .hybrid import (
    HybridSample,
    HybridTrajectory,
    SampleTag,
    simulate_hybrid,
    simulate_reference,
)
from .rules import (
    LinearMap,
    Replenishment,
    ResetKind,
    ResetRule,
    ScalarScale,
    apply_reset,
)

__all__ = [
    "HybridSample",
    "HybridTrajectory",
    "LinearMap",
    "Replenishment",
    "ResetKind",
    "ResetRule",
    "SampleTag",
    "ScalarScale",
    "apply_reset",
    "simulate_hybrid",
    "simulate_reference",
]
