from __future__ import annotations

import numpy as np
import pytest

from resetlab.dynamics.state import StateVector
from resetlab.errors import DimensionMismatch, ValidationError


def test_values_are_read_only_copies() -> None:
    source = np.array([1.0, 2.0])
    state = StateVector(source)
    source[0] = 99.0
    assert state[0] == 1.0
    with pytest.raises(ValueError):
        state.values[0] = 5.0
    copy = state.to_array()
    copy[1] = 7.0
    assert state[1] == 2.0


def test_rejects_non_finite_and_empty() -> None:
    with pytest.raises(ValidationError):
        StateVector.of(1.0, float("nan"))
    with pytest.raises(DimensionMismatch):
        StateVector(np.zeros((2, 2)))
    with pytest.raises(DimensionMismatch):
        StateVector(np.array([]))


def test_equality_and_hash() -> None:
    a = StateVector.of(0.5, 0.25)
    b = StateVector.from_iterable([0.5, 0.25])
    assert a == b
    assert hash(a) == hash(b)
    assert a != StateVector.of(0.5)
    assert len(a) == 2
    assert list(a) == [0.5, 0.25]


def test_require_dim() -> None:
    with pytest.raises(DimensionMismatch):
        StateVector.of(1.0).require_dim(2)
