"""Stroboscopic map ``P = R o Phi_T`` of a periodically reset flow."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..constants import DEFAULT_H_REL
from ..dynamics.integrator import IntegratorConfig, flow_map
from ..dynamics.state import StateVector
from ..errors import DimensionMismatch, DomainError, ValidationError
from ..models.base import ModelSpec
from ..resets.rules import ResetRule, apply_reset
from ..typing import FloatArray


@dataclass(frozen=True, slots=True)
class StroboscopicMap:
    """Flow one period, then reset.

    Samples of the map are post-reset states, i.e. states at period starts.
    """

    model: ModelSpec
    rule: ResetRule
    cfg: IntegratorConfig = field(default_factory=IntegratorConfig)

    def __post_init__(self) -> None:
        if self.rule.dim is not None and self.rule.dim != self.model.dim:
            raise DimensionMismatch(
                f"reset acts on dimension {self.rule.dim}, "
                f"model {self.model.name} has {self.model.dim}"
            )

    @property
    def dim(self) -> int:
        return self.model.dim

    def __call__(self, x: StateVector) -> StateVector:
        return map_eval(self, x)


def map_eval(P: StroboscopicMap, x: StateVector) -> StateVector:
    """Return ``apply_reset(rule, Phi_T(x))``.

    Raises:
        DomainError: If the flow leaves the model domain.
    """

    x.require_dim(P.dim)
    return apply_reset(P.rule, flow_map(P.model, x, P.rule.period, P.cfg))


def iterate_map(P: StroboscopicMap, x0: StateVector, n: int) -> tuple[StateVector, ...]:
    """Return ``x_1 .. x_n`` with ``x_{k+1} = P(x_k)``.

    Raises:
        DomainError: Annotated with the failing iteration (1-based) and the
            prefix computed before the failure.
    """

    if n < 1:
        raise ValidationError("number of iterations must be positive")
    orbit: list[StateVector] = []
    x = x0
    for k in range(1, n + 1):
        try:
            x = map_eval(P, x)
        except DomainError as exc:
            raise exc.with_context(iteration=k, prefix=tuple(orbit)) from exc
        orbit.append(x)
    return tuple(orbit)


@dataclass(frozen=True, slots=True)
class JacobianEstimate:
    """Finite-difference Jacobian of a map.

    ``one_sided`` lists the columns where a central difference was impossible
    because a probe left the domain.
    """

    matrix: FloatArray
    one_sided: tuple[int, ...] = ()

    @property
    def flagged(self) -> bool:
        return bool(self.one_sided)


def _probe(P: StroboscopicMap, x: FloatArray) -> FloatArray | None:
    candidate = StateVector(x)
    if not P.model.in_domain(candidate):
        return None
    try:
        return map_eval(P, candidate).to_array()
    except DomainError:
        return None


def jacobian_fd(
    P: StroboscopicMap, x: StateVector, h_rel: float = DEFAULT_H_REL
) -> JacobianEstimate:
    """Estimate the Jacobian of ``P`` at ``x`` column by column.

    Central differences use ``h_j = max(h_rel, h_rel * |x_j|)``. When one probe
    leaves the domain the column falls back to a second-order one-sided
    difference, or a first-order one when the farther probe leaves it as well.

    Raises:
        DomainError: If neither probe of a column can be evaluated.
    """

    if not h_rel > 0:
        raise ValidationError("h_rel must be positive")
    x.require_dim(P.dim)
    base = x.to_array()
    centre: FloatArray | None = None
    matrix = np.zeros((P.dim, P.dim))
    one_sided: list[int] = []
    for j in range(P.dim):
        h = max(h_rel, h_rel * abs(base[j]))
        plus = base.copy()
        plus[j] += h
        minus = base.copy()
        minus[j] -= h
        f_plus = _probe(P, plus)
        f_minus = _probe(P, minus)
        if f_plus is not None and f_minus is not None:
            matrix[:, j] = (f_plus - f_minus) / (2.0 * h)
            continue
        if centre is None:
            centre = map_eval(P, x).to_array()
        one_sided.append(j)
        if f_plus is not None:
            sign, near = 1.0, f_plus
        elif f_minus is not None:
            sign, near = -1.0, f_minus
        else:
            raise DomainError(
                "both finite-difference probes left the domain",
                coordinate=j,
                state=x,
            )
        far_point = base.copy()
        far_point[j] += 2.0 * sign * h
        far = _probe(P, far_point)
        if far is None:
            matrix[:, j] = sign * (near - centre) / h
        else:
            # Second-order one-sided difference.
            matrix[:, j] = sign * (4.0 * near - 3.0 * centre - far) / (2.0 * h)
    matrix.setflags(write=False)
    return JacobianEstimate(matrix=matrix, one_sided=tuple(one_sided))
