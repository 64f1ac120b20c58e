from __future__ import annotations

import math
import warnings

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from resetlab.dynamics.state import StateVector
from resetlab.resets import LinearMap, Replenishment, ScalarScale, apply_reset

populations = st.lists(
    st.floats(min_value=0.0, max_value=1e4, allow_nan=False), min_size=2, max_size=4
)


@st.composite
def replenishment_cases(draw: st.DrawFn) -> tuple[Replenishment, StateVector]:
    state = draw(populations)
    weights = draw(
        st.lists(
            st.floats(min_value=0.01, max_value=1.0),
            min_size=len(state),
            max_size=len(state),
        )
    )
    fractions = np.array(weights) / math.fsum(weights)
    # force an exact sum of one
    fractions[-1] = 1.0 - math.fsum(fractions[:-1].tolist())
    n0 = draw(st.floats(min_value=1.0, max_value=1e4))
    rule = Replenishment(period=1.0, fractions=fractions, n0=n0)
    return rule, StateVector(np.array(state))


@given(replenishment_cases())
def test_replenishment_restores_total(case: tuple[Replenishment, StateVector]) -> None:
    rule, state = case
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        x_plus = apply_reset(rule, state)
    assert math.isclose(math.fsum(x_plus), rule.n0, rel_tol=1e-12, abs_tol=1e-9)


@given(
    st.floats(min_value=0.01, max_value=0.99),
    st.lists(st.floats(min_value=-1e6, max_value=1e6), min_size=1, max_size=4),
)
def test_scalar_scale_is_linear(gamma: float, values: list[float]) -> None:
    rule = ScalarScale(period=1.0, gamma=gamma)
    x = StateVector(np.array(values))
    assert apply_reset(rule, x).values.tolist() == [gamma * v for v in values]


@given(st.lists(st.floats(min_value=-10.0, max_value=10.0), min_size=4, max_size=4))
def test_linear_map_matches_matrix_product(entries: list[float]) -> None:
    matrix = np.array(entries).reshape(2, 2)
    rule = LinearMap(period=1.0, matrix=matrix)
    x = StateVector.of(1.0, -2.0)
    assert np.array_equal(apply_reset(rule, x).values, matrix @ np.array([1.0, -2.0]))
