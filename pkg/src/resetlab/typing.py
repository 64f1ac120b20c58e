"""Public typing helpers for resetlab."""

from __future__ import annotations

from typing import TYPE_CHECKING, Protocol, runtime_checkable

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    from .dynamics.state import StateVector

FloatArray = npt.NDArray[np.float64]


class VectorField(Protocol):
    """Right-hand side ``f(t, x)`` of an ODE ``x' = f(t, x)``."""

    def __call__(self, t: float, x: FloatArray) -> FloatArray:
        ...


class StateMap(Protocol):
    """Discrete map acting on states, such as a stroboscopic map."""

    def __call__(self, x: StateVector) -> StateVector:
        ...


@runtime_checkable
class DomainGuard(Protocol):
    """Vector field that can validate a state before it is evaluated."""

    def check_domain(self, x: FloatArray) -> None:
        ...
