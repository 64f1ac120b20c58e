"""Exception hierarchy for the resetlab toolkit."""

from __future__ import annotations

import copy
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .dynamics.state import StateVector


class ResetLabError(Exception):
    """Base class for all resetlab related exceptions."""


class ConfigError(ResetLabError):
    """Raised for problems with user supplied configuration."""


class ParseError(ConfigError):
    """Raised when a configuration document cannot be parsed."""

    def __init__(
        self, message: str, *, line: int | None = None, key: str | None = None
    ) -> None:
        location = []
        if line is not None:
            location.append(f"line {line}")
        if key is not None:
            location.append(f"key {key!r}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.key = key


class ValidationError(ConfigError, ValueError):
    """Raised when a value violates a documented invariant."""


class DimensionMismatch(ResetLabError, ValueError):
    """Raised when state, model and reset dimensions disagree."""


class UnsupportedOperation(ResetLabError):
    """Raised when a model lacks an optional capability such as a closed form."""


class NumericalError(ResetLabError):
    """Base class for failures of the numerical procedures."""


class DomainError(NumericalError):
    """Raised when a state leaves the domain where the vector field is defined."""

    def __init__(
        self,
        message: str,
        *,
        coordinate: int | None = None,
        time: float | None = None,
        state: StateVector | None = None,
        iteration: int | None = None,
        prefix: tuple[StateVector, ...] = (),
    ) -> None:
        super().__init__(message)
        self.message = message
        self.coordinate = coordinate
        self.time = time
        self.state = state
        self.iteration = iteration
        self.prefix = prefix

    def with_context(self, **context: Any) -> DomainError:
        """Return a copy annotated with additional context.

        Fields already set are kept unless overridden explicitly.
        """

        clone = copy.copy(self)
        for name, value in context.items():
            if not hasattr(clone, name):
                raise AttributeError(f"unknown DomainError field {name!r}")
            setattr(clone, name, value)
        return clone

    def __str__(self) -> str:
        details = []
        if self.coordinate is not None:
            details.append(f"coordinate={self.coordinate}")
        if self.time is not None:
            details.append(f"t={self.time!r}")
        if self.iteration is not None:
            details.append(f"iteration={self.iteration}")
        if self.state is not None:
            details.append(f"state={self.state.values.tolist()!r}")
        if not details:
            return self.message
        return f"{self.message} ({', '.join(details)})"


class StepUnderflow(NumericalError):
    """Raised when the adaptive step shrinks below a meaningful size."""


class NoConvergence(NumericalError):
    """Raised when an iteration exhausts its budget."""

    def __init__(self, max_iter: int, best: StateVector | None = None) -> None:
        super().__init__(f"no convergence within {max_iter} iterations")
        self.max_iter = max_iter
        self.best = best


class SingularJacobian(NumericalError):
    """Raised when Newton's linear system cannot be solved reliably."""


class InvalidTarget(NumericalError):
    """Raised when a basin target is not a fixed point of the map."""


class NegativePopulationError(ResetLabError):
    """Raised in strict mode when replenishment produces negative classes."""


class NegativePopulationWarning(UserWarning):
    """Issued when replenishment produces negative classes outside strict mode."""
