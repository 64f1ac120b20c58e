"""Logistisches Wachstum mit periodischem Zurücksetzen um den Faktor gamma."""

from __future__ import annotations

from .. import (
    IntegratorConfig,
    ScalarScale,
    StateVector,
    StroboscopicMap,
    build_model,
    find_fixed_point,
    simulate_hybrid,
)


def main() -> float:
    model = build_model("logistic", alpha=1.0, beta=0.9)
    rule = ScalarScale(period=1.0, gamma=0.67)
    cfg = IntegratorConfig()
    for start in (0.5, 1.2):
        trajectory = simulate_hybrid(
            model, rule, StateVector.of(start), 0.0, 100.0, cfg, 21
        )
        level = trajectory.post_reset_states()[-1][0]
        print(f"x0={start}: Niveau nach 100 Perioden {level:.10f}")
    report = find_fixed_point(StroboscopicMap(model, rule, cfg), StateVector.of(0.5))
    print(
        f"Fixpunkt {report.x_star[0]:.10f}, Spektralradius "
        f"{report.spectral_radius:.6f} ({report.classification.value})"
    )
    return report.x_star[0]


if __name__ == "__main__":
    main()
