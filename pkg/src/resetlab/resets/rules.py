"""Reset rules applied at the end of every period."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import ClassVar

import numpy as np

from ..constants import FRACTION_SUM_TOL
from ..dynamics.state import StateVector
from ..errors import (
    DimensionMismatch,
    NegativePopulationError,
    NegativePopulationWarning,
    ValidationError,
)
from ..logging import get_logger
from ..typing import FloatArray

_logger = get_logger("resetlab.resets")


class ResetKind(str, Enum):
    """Supported reset rule kinds."""

    SCALAR_SCALE = "scalar_scale"
    LINEAR_MAP = "linear_map"
    REPLENISHMENT = "replenishment"


@dataclass(frozen=True, slots=True, eq=False)
class ResetRule:
    """Base class of all reset rules.

    Attributes:
        period: Time between consecutive resets.
    """

    period: float
    KIND: ClassVar[ResetKind]

    def __post_init__(self) -> None:
        if not (math.isfinite(self.period) and self.period > 0):
            raise ValidationError("reset period T must be positive and finite")

    @property
    def dim(self) -> int | None:
        """Dimension the rule acts on, ``None`` if it acts on any dimension."""

        return None

    def apply(self, x_minus: FloatArray) -> FloatArray:  # pragma: no cover - abstract
        raise NotImplementedError

    def scalar_parameters(self) -> tuple[str, ...]:
        """Names of the real-valued fields that can be swept."""

        return tuple(f.name for f in fields(self) if f.type == "float")

    def with_param(self, name: str, value: float) -> ResetRule:
        """Return a copy with the scalar field ``name`` replaced."""

        scalar = self.scalar_parameters()
        if name not in scalar:
            raise ValidationError(
                f"{self.KIND.value} has no scalar parameter {name!r}; "
                f"known: {', '.join(sorted(scalar))}"
            )
        return replace(self, **{name: float(value)})


@dataclass(frozen=True, slots=True)
class ScalarScale(ResetRule):
    """Multiply the state by ``gamma`` with ``0 < gamma < 1``."""

    gamma: float
    KIND: ClassVar[ResetKind] = ResetKind.SCALAR_SCALE

    def __post_init__(self) -> None:
        super(ScalarScale, self).__post_init__()
        if not 0 < self.gamma < 1:
            raise ValidationError(f"gamma must satisfy 0 < gamma < 1, got {self.gamma}")

    def apply(self, x_minus: FloatArray) -> FloatArray:
        result: FloatArray = self.gamma * x_minus
        return result


@dataclass(frozen=True, slots=True, eq=False)
class LinearMap(ResetRule):
    """Multiply the state by a square matrix."""

    matrix: FloatArray
    KIND: ClassVar[ResetKind] = ResetKind.LINEAR_MAP

    def __post_init__(self) -> None:
        super(LinearMap, self).__post_init__()
        matrix = np.array(self.matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or not matrix.size:
            raise ValidationError("reset matrix must be square and non-empty")
        if not np.all(np.isfinite(matrix)):
            raise ValidationError("reset matrix entries must be finite")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int | None:
        return int(self.matrix.shape[0])

    def apply(self, x_minus: FloatArray) -> FloatArray:
        result: FloatArray = self.matrix @ x_minus
        return result


@dataclass(frozen=True, slots=True, eq=False)
class Replenishment(ResetRule):
    """Restore the total population ``n0`` by distributing the deficit.

    Each class receives the share ``fractions[j]`` of ``n0 - sum(x)``; the
    increment is added to the current class sizes.
    """

    fractions: FloatArray
    n0: float
    strict: bool = False
    KIND: ClassVar[ResetKind] = ResetKind.REPLENISHMENT

    def __post_init__(self) -> None:
        super(Replenishment, self).__post_init__()
        fractions = np.array(self.fractions, dtype=np.float64)
        if fractions.ndim != 1 or not fractions.size:
            raise ValidationError("replenishment fractions must be a non-empty vector")
        if np.any(fractions < 0) or not np.all(np.isfinite(fractions)):
            raise ValidationError("replenishment fractions must be non-negative")
        if abs(math.fsum(fractions.tolist()) - 1.0) > FRACTION_SUM_TOL:
            raise ValidationError("replenishment fractions must sum to 1")
        if not (math.isfinite(self.n0) and self.n0 > 0):
            raise ValidationError("replenishment total n0 must be positive")
        fractions.setflags(write=False)
        object.__setattr__(self, "fractions", fractions)

    @classmethod
    def from_initial_state(
        cls, x0: StateVector, period: float, *, strict: bool = False
    ) -> Replenishment:
        """Use ``c_j = x0_j / sum(x0)`` and ``n0 = sum(x0)``."""

        total = math.fsum(x0)
        if not total > 0:
            raise ValidationError("initial total population must be positive")
        return cls(
            period=period,
            fractions=x0.values / total,
            n0=total,
            strict=strict,
        )

    @property
    def dim(self) -> int | None:
        return int(self.fractions.size)

    def apply(self, x_minus: FloatArray) -> FloatArray:
        deficit = self.n0 - math.fsum(x_minus.tolist())
        x_plus: FloatArray = x_minus + self.fractions * deficit
        # Absorb rounding in the class with the largest share so the total is n0.
        largest = int(np.argmax(self.fractions))
        x_plus[largest] += self.n0 - math.fsum(x_plus.tolist())
        if np.any(x_plus < 0):
            message = f"replenishment produced negative classes: {x_plus.tolist()}"
            if self.strict:
                raise NegativePopulationError(message)
            _logger.warning("negative replenishment", state=x_plus.tolist())
            warnings.warn(message, NegativePopulationWarning, stacklevel=3)
        return x_plus


def apply_reset(rule: ResetRule, x_minus: StateVector) -> StateVector:
    """Apply ``rule`` to the left limit ``x_minus``.

    Raises:
        DimensionMismatch: If the rule and state dimensions differ.
        NegativePopulationError: For strict replenishment with negative classes.
    """

    if rule.dim is not None and rule.dim != x_minus.dim:
        raise DimensionMismatch(
            f"{rule.KIND.value} acts on dimension {rule.dim}, state has {x_minus.dim}"
        )
    return StateVector(rule.apply(x_minus.to_array()))
