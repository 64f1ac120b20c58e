from __future__ import annotations

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from resetlab.analysis import Stability, classify_stability
from resetlab.dynamics.integrator import IntegratorConfig, integrate
from resetlab.dynamics.state import StateVector
from resetlab.models import build_model, rhs_eval
from resetlab.resets import SampleTag, ScalarScale, simulate_hybrid


@settings(max_examples=25, deadline=None)
@given(
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=0.1, max_value=3.0),
    st.integers(min_value=2, max_value=12),
)
def test_samples_end_on_requested_time(x0: float, t1: float, n: int) -> None:
    model = build_model("malthus_decay", alpha=1.0)
    segment = integrate(model, StateVector.of(x0), 0.0, t1, IntegratorConfig(), n)
    assert segment.t_end == t1
    assert len(segment.states) == n
    assert math.isclose(segment.final[0], x0 * math.exp(-t1), rel_tol=1e-8)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.01, max_value=2.0))
def test_logistic_flow_stays_in_domain(x0: float) -> None:
    model = build_model("logistic", alpha=1.0, beta=0.9)
    segment = integrate(model, StateVector.of(x0), 0.0, 5.0, IntegratorConfig(), 6)
    for state in segment.states:
        assert state[0] > 0.0
        assert min(x0, 0.9) - 1e-12 <= state[0] <= max(x0, 0.9) + 1e-12


@given(st.floats(min_value=0.0, max_value=3.0, allow_nan=False))
def test_classification_matches_radius(rho: float) -> None:
    label = classify_stability(rho)
    if rho < 1.0 - 1e-6:
        assert label is Stability.STABLE
    elif rho > 1.0 + 1e-6:
        assert label is Stability.UNSTABLE
    else:
        assert label is Stability.MARGINAL


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.05, max_value=1.2))
def test_hybrid_flow_samples_solve_the_ode(x0: float) -> None:
    model = build_model("logistic", alpha=1.0, beta=0.9)
    rule = ScalarScale(period=1.0, gamma=0.67)
    samples = simulate_hybrid(
        model, rule, StateVector.of(x0), 0.0, 3.0, IntegratorConfig(), 101
    ).samples
    for before, mid, after in zip(samples, samples[1:], samples[2:], strict=False):
        if mid.tag is not SampleTag.FLOW:
            continue
        slope = (after.state[0] - before.state[0]) / (after.t - before.t)
        assert abs(slope - rhs_eval(model, mid.state)[0]) <= 1e-4
