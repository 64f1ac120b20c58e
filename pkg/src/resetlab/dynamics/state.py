"""Immutable state vectors."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import overload

import numpy as np

from ..errors import DimensionMismatch, ValidationError
from ..typing import FloatArray


@dataclass(frozen=True, slots=True, eq=False)
class StateVector:
    """Point in R^d.

    The values are stored as a read-only float64 array. Construction rejects
    empty, multi-dimensional and non-finite input.
    """

    values: FloatArray

    def __post_init__(self) -> None:
        array = np.array(self.values, dtype=np.float64)
        if array.ndim == 0:
            array = array.reshape(1)
        if array.ndim != 1 or array.size == 0:
            raise DimensionMismatch("state must be a non-empty 1-D vector")
        if not np.all(np.isfinite(array)):
            raise ValidationError(f"state entries must be finite: {array.tolist()}")
        array.setflags(write=False)
        object.__setattr__(self, "values", array)

    @classmethod
    def of(cls, *values: float) -> StateVector:
        """Build a state from scalar coordinates."""

        return cls(np.array(values, dtype=np.float64))

    @classmethod
    def from_iterable(cls, values: Iterable[float]) -> StateVector:
        return cls(np.fromiter(values, dtype=np.float64))

    @property
    def dim(self) -> int:
        return int(self.values.size)

    def to_array(self) -> FloatArray:
        """Return a writable copy of the coordinates."""

        return self.values.copy()

    def require_dim(self, dim: int) -> None:
        if self.dim != dim:
            raise DimensionMismatch(f"expected dimension {dim}, got {self.dim}")

    def __len__(self) -> int:
        return self.dim

    def __iter__(self) -> Iterator[float]:
        return (float(v) for v in self.values)

    @overload
    def __getitem__(self, index: int) -> float: ...

    @overload
    def __getitem__(self, index: slice) -> tuple[float, ...]: ...

    def __getitem__(self, index: int | slice) -> float | tuple[float, ...]:
        if isinstance(index, slice):
            return tuple(float(v) for v in self.values[index])
        return float(self.values[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def __repr__(self) -> str:
        return f"StateVector({self.values.tolist()!r})"
