"""Four-class college drinking model with interaction-driven transitions.

Classes ``N1..N4`` exchange members through linear rates ``r_ij`` and through
mass-action terms ``s_ij N_i N_j / N`` and ``n_ij N_i N_j / N`` where ``N`` is
the total population. Every class loses members at its dropout rate ``d_i``.

The default parameters are synthetic placeholders (units 1/year) and carry no
empirical meaning; pass explicit values for any study.
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from ..typing import FloatArray
from .base import UNBOUNDED, ModelSpec, Params, require_non_negative

DROPOUT = ("d1", "d2", "d3", "d4")
LINEAR = ("r21", "r31", "r23", "r24", "r42", "r43")
INTERACTION = ("s12", "s23", "s24", "s42", "s43")
ADDITIONAL = ("n12", "n24")

PARAMETERS: dict[str, float] = {
    **{name: 0.25 for name in DROPOUT},
    **{name: 0.1 for name in LINEAR},
    **{name: 0.2 for name in INTERACTION},
    **{name: 0.05 for name in ADDITIONAL},
}


def _rhs(p: Params, x: FloatArray) -> FloatArray:
    n1, n2, n3, n4 = (float(v) for v in x)
    total = n1 + n2 + n3 + n4
    if not total > 0:
        raise DomainError(f"total population {total!r} must be positive")
    a12 = n1 * n2 / total
    a23 = n2 * n3 / total
    a24 = n2 * n4 / total
    a43 = n4 * n3 / total
    dn1 = (
        -p["d1"] * n1
        + p["r21"] * n2
        + p["r31"] * n3
        - p["s12"] * a12
        - p["n12"] * a12
    )
    dn2 = (
        -p["d2"] * n2
        - p["r21"] * n2
        - p["r23"] * n2
        - p["r24"] * n2
        + p["r42"] * n4
        + p["s12"] * a12
        - p["s23"] * a23
        + (p["s42"] - p["s24"]) * a24
        + p["n12"] * a12
        - p["n24"] * a24
    )
    dn3 = (
        -p["d3"] * n3
        + p["r23"] * n2
        - p["r31"] * n3
        + p["r43"] * n4
        + p["s23"] * a23
        + p["s43"] * a43
    )
    dn4 = (
        -p["d4"] * n4
        + p["r24"] * n2
        - p["r42"] * n4
        - p["r43"] * n4
        + (p["s24"] - p["s42"]) * a24
        - p["s43"] * a43
        + p["n24"] * a24
    )
    return np.array([dn1, dn2, dn3, dn4])


def build(**params: float) -> ModelSpec:
    merged = {**PARAMETERS, **params}
    require_non_negative(merged, *PARAMETERS)
    return ModelSpec(
        name="college",
        dim=4,
        params=merged,
        domain=(UNBOUNDED,) * 4,
        rhs=_rhs,
        description="four-class drinking model with dropout (synthetic defaults)",
        defaults=PARAMETERS,
        factory=build,
    )
