"""Registry of the model catalogue."""

from __future__ import annotations

from collections.abc import Callable

from ..errors import ValidationError
from . import (
    college,
    gompertz,
    gompertz_coupled,
    logistic,
    logistic_coupled,
    malthus,
    zero_field,
)
from .base import ModelSpec

ModelFactory = Callable[..., ModelSpec]

_MODEL_FACTORIES: dict[str, ModelFactory] = {
    "malthus_decay": malthus.build_decay,
    "malthus_growth": malthus.build_growth,
    "logistic": logistic.build,
    "gompertz": gompertz.build,
    "logistic_coupled": logistic_coupled.build,
    "gompertz_coupled": gompertz_coupled.build,
    "college": college.build,
    "zero_field": zero_field.build,
}


def register_model(name: str, factory: ModelFactory) -> None:
    """Register a factory for an additional model."""

    _MODEL_FACTORIES[name] = factory


def available_models() -> tuple[str, ...]:
    return tuple(sorted(_MODEL_FACTORIES))


def build_model(name: str, **params: float) -> ModelSpec:
    """Instantiate a catalogued model.

    Raises:
        ValidationError: If ``name`` is unknown or a parameter is invalid.
    """

    factory = _MODEL_FACTORIES.get(name)
    if factory is None:
        raise ValidationError(
            f"unknown model {name!r}; available: {', '.join(available_models())}"
        )
    default = factory()
    unknown = sorted(set(params) - set(default.params))
    if unknown:
        raise ValidationError(
            f"unknown parameter(s) {', '.join(unknown)} for model {name}; "
            f"known: {', '.join(sorted(default.params))}"
        )
    return factory(**params) if params else default
