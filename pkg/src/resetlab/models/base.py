"""Model specifications: vector field, parameters, domain and known solutions."""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from ..dynamics.state import StateVector
from ..errors import DomainError, UnsupportedOperation, ValidationError
from ..typing import FloatArray

Params = Mapping[str, float]
RightHandSide = Callable[[Params, FloatArray], FloatArray]
ClosedForm = Callable[[Params, FloatArray, float], FloatArray]
EquilibriaFunction = Callable[[Params], tuple[FloatArray, ...]]


@dataclass(frozen=True, slots=True)
class Bound:
    """Interval constraint on one coordinate."""

    lo: float = -math.inf
    hi: float = math.inf
    lo_open: bool = False
    hi_open: bool = False

    def contains(self, value: float) -> bool:
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def describe(self) -> str:
        left = "(" if self.lo_open or math.isinf(self.lo) else "["
        right = ")" if self.hi_open or math.isinf(self.hi) else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


UNBOUNDED = Bound()
NON_NEGATIVE = Bound(lo=0.0)
POSITIVE = Bound(lo=0.0, lo_open=True)


def _no_equilibria(params: Params) -> tuple[FloatArray, ...]:
    return ()


@dataclass(frozen=True, slots=True)
class ModelSpec:
    """Named autonomous vector field with parameters and metadata.

    Instances are callable as ``model(t, x)`` and therefore usable wherever a
    vector field is expected. The time argument is ignored.
    """

    name: str
    dim: int
    params: Params
    domain: tuple[Bound, ...]
    rhs: RightHandSide
    closed_form: ClosedForm | None = None
    equilibria_fn: EquilibriaFunction = _no_equilibria
    equilibrium_sets: tuple[str, ...] = ()
    description: str = ""
    defaults: Params = field(default_factory=dict)
    factory: Callable[..., ModelSpec] | None = None

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValidationError("model dimension must be positive")
        if len(self.domain) != self.dim:
            raise ValidationError("domain must provide one bound per coordinate")
        for key, value in self.params.items():
            if not math.isfinite(value):
                raise ValidationError(f"parameter {key} must be finite")
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))
        object.__setattr__(
            self, "defaults", MappingProxyType(dict(self.defaults or self.params))
        )

    def __call__(self, t: float, x: FloatArray) -> FloatArray:
        return self.rhs(self.params, x)

    def check_domain(self, x: FloatArray) -> None:
        """Raise :class:`DomainError` if ``x`` violates a coordinate bound."""

        for index, (value, bound) in enumerate(zip(x, self.domain, strict=True)):
            if not bound.contains(float(value)):
                raise DomainError(
                    f"{self.name}: coordinate {index} = {float(value)!r} outside "
                    f"{bound.describe()}",
                    coordinate=index,
                )

    def in_domain(self, x: StateVector) -> bool:
        try:
            self.check_domain(x.values)
        except DomainError:
            return False
        return True

    def with_params(self, **overrides: float) -> ModelSpec:
        """Return a copy with some parameters replaced."""

        unknown = sorted(set(overrides) - set(self.params))
        if unknown:
            raise ValidationError(
                f"unknown parameter(s) {', '.join(unknown)} for model {self.name}; "
                f"known: {', '.join(sorted(self.params))}"
            )
        merged = dict(self.params)
        merged.update({k: float(v) for k, v in overrides.items()})
        if self.factory is not None:
            return self.factory(**merged)
        return ModelSpec(
            name=self.name,
            dim=self.dim,
            params=merged,
            domain=self.domain,
            rhs=self.rhs,
            closed_form=self.closed_form,
            equilibria_fn=self.equilibria_fn,
            equilibrium_sets=self.equilibrium_sets,
            description=self.description,
            defaults=self.defaults,
            factory=None,
        )


def require_non_negative(params: Params, *names: str) -> None:
    for name in names:
        if params[name] < 0:
            raise ValidationError(f"parameter {name} must be non-negative")


def require_positive(params: Params, *names: str) -> None:
    for name in names:
        if not params[name] > 0:
            raise ValidationError(f"parameter {name} must be positive")


def rhs_eval(model: ModelSpec, x: StateVector) -> StateVector:
    """Evaluate the right-hand side of ``model`` at ``x``.

    Raises:
        DimensionMismatch: If ``x`` has the wrong dimension.
        DomainError: If ``x`` lies outside the model domain.
    """

    x.require_dim(model.dim)
    values = x.values
    model.check_domain(values)
    return StateVector(model.rhs(model.params, values))


def closed_form_eval(model: ModelSpec, x0: StateVector, t: float) -> StateVector:
    """Evaluate the analytic solution of ``model`` from ``x0`` at time ``t``.

    Raises:
        UnsupportedOperation: If the model has no closed form.
    """

    if model.closed_form is None:
        raise UnsupportedOperation(f"model {model.name} has no closed form")
    x0.require_dim(model.dim)
    model.check_domain(x0.values)
    if t == 0:
        return x0
    return StateVector(model.closed_form(model.params, x0.values, t))


def equilibria(model: ModelSpec) -> list[StateVector]:
    """Return the isolated equilibria listed for ``model``.

    Continua of equilibria are reported in ``model.equilibrium_sets``.
    """

    points = model.equilibria_fn(model.params)
    return [StateVector(np.asarray(p, dtype=np.float64)) for p in points]
