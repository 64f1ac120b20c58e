"""Vier-Klassen-Modell mit jährlichem Auffüllen der Gesamtpopulation."""

from __future__ import annotations

import math

from .. import (
    IntegratorConfig,
    Replenishment,
    StateVector,
    build_model,
    simulate_hybrid,
)


def main() -> tuple[float, ...]:
    model = build_model("college")
    x0 = StateVector.of(400.0, 300.0, 200.0, 100.0)
    rule = Replenishment.from_initial_state(x0, period=1.0)
    trajectory = simulate_hybrid(model, rule, x0, 0.0, 10.0, IntegratorConfig(), 21)
    for t, state in zip(
        trajectory.reset_times, trajectory.post_reset_states(), strict=True
    ):
        print(f"t={t:4.1f} N={math.fsum(state):.6f} {list(state)}")
    return tuple(trajectory.post_reset_states()[-1])


if __name__ == "__main__":
    main()
