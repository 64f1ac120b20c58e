"""Fixed points of the stroboscopic map and their stability."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..constants import (
    DEFAULT_FIXED_POINT_TOL,
    DEFAULT_H_REL,
    DEFAULT_MAX_ITER,
    MAX_NEWTON_HALVINGS,
    SINGULAR_CONDITION,
    STABILITY_MARGIN,
)
from ..dynamics.state import StateVector
from ..errors import DomainError, NoConvergence, SingularJacobian, ValidationError
from ..logging import get_logger
from ..typing import FloatArray
from ..utils.linalg import spectral_radius, sup_norm
from .strobe import StroboscopicMap, jacobian_fd, map_eval

_logger = get_logger("resetlab.fixed_point")


class FixedPointMethod(str, Enum):
    """Fixed-point solvers.

    ``AUTO`` runs Picard iteration for half the budget and continues with
    Newton from the last iterate if Picard has not converged.
    """

    PICARD = "picard"
    NEWTON_FD = "newton_fd"
    AUTO = "auto"


class Stability(str, Enum):
    STABLE = "stable"
    UNSTABLE = "unstable"
    MARGINAL = "marginal"


@dataclass(frozen=True, slots=True, eq=False)
class FixedPointReport:
    """Result of :func:`find_fixed_point`."""

    x_star: StateVector
    residual: float
    iterations: int
    jacobian: FloatArray
    spectral_radius: float
    classification: Stability
    method: FixedPointMethod
    one_sided: bool = False


def classify_stability(rho: float, margin: float = STABILITY_MARGIN) -> Stability:
    """Classify a fixed point from the spectral radius of its Jacobian."""

    if rho < 1.0 - margin:
        return Stability.STABLE
    if rho > 1.0 + margin:
        return Stability.UNSTABLE
    return Stability.MARGINAL


class _Tracker:
    """Keeps the iterate with the smallest residual seen so far."""

    def __init__(self) -> None:
        self.best: StateVector | None = None
        self.best_residual = np.inf

    def offer(self, x: StateVector, residual: float) -> None:
        if residual < self.best_residual:
            self.best = x
            self.best_residual = residual


def _picard(
    P: StroboscopicMap,
    x0: StateVector,
    tol: float,
    budget: int,
    tracker: _Tracker,
) -> tuple[StateVector, float, int, bool]:
    x = x0
    for k in range(1, budget + 1):
        try:
            image = map_eval(P, x)
        except DomainError as exc:
            raise exc.with_context(iteration=k) from exc
        residual = sup_norm(image.values - x.values)
        tracker.offer(x, residual)
        if residual <= tol:
            return x, residual, k, True
        x = image
    return x, np.inf, budget, False


def _newton_direction(
    P: StroboscopicMap, x: StateVector, g: FloatArray, h_rel: float
) -> FloatArray:
    jac = jacobian_fd(P, x, h_rel).matrix - np.eye(P.dim)
    try:
        condition = float(np.linalg.cond(jac))
        if not np.isfinite(condition) or condition > SINGULAR_CONDITION:
            raise SingularJacobian(
                f"Newton matrix is singular (condition number {condition:.3e})"
            )
        delta: FloatArray = np.linalg.solve(jac, -g)
    except np.linalg.LinAlgError as exc:
        raise SingularJacobian(str(exc)) from exc
    return delta


def _damped_step(P: StroboscopicMap, x: StateVector, delta: FloatArray) -> StateVector:
    step = 1.0
    for _ in range(MAX_NEWTON_HALVINGS):
        candidate = x.values + step * delta
        if np.all(np.isfinite(candidate)):
            state = StateVector(candidate)
            if P.model.in_domain(state):
                return state
        step *= 0.5
    raise DomainError("Newton step cannot be kept inside the domain", state=x)


def _newton(
    P: StroboscopicMap,
    x0: StateVector,
    tol: float,
    budget: int,
    h_rel: float,
    tracker: _Tracker,
) -> tuple[StateVector, float, int, bool]:
    # Converged once both the residual and the Newton correction are below tol.
    x = x0
    for k in range(1, budget + 1):
        try:
            g = map_eval(P, x).values - x.values
        except DomainError as exc:
            raise exc.with_context(iteration=k) from exc
        residual = sup_norm(g)
        tracker.offer(x, residual)
        if residual == 0.0:
            return x, residual, k, True
        try:
            delta = _newton_direction(P, x, g, h_rel)
        except SingularJacobian:
            if residual <= tol:
                return x, residual, k, True
            raise
        if residual <= tol and sup_norm(delta) <= tol:
            return x, residual, k, True
        x = _damped_step(P, x, delta)
    return x, np.inf, budget, False


def find_fixed_point(
    P: StroboscopicMap,
    x0: StateVector,
    tol: float = DEFAULT_FIXED_POINT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    method: FixedPointMethod | str = FixedPointMethod.AUTO,
    h_rel: float = DEFAULT_H_REL,
) -> FixedPointReport:
    """Locate a fixed point ``x* = P(x*)`` and classify its stability.

    Args:
        P: Stroboscopic map.
        x0: Starting point inside the model domain.
        tol: Bound on ``||P(x*) - x*||_inf`` accepted as converged. Newton
            iterations also require the last correction to be below ``tol``.
        max_iter: Map-evaluation budget of the iteration.
        method: ``picard``, ``newton_fd`` or ``auto``.
        h_rel: Relative finite-difference step for Jacobians.

    Returns:
        The fixed point with residual, Jacobian, spectral radius and class.

    Raises:
        NoConvergence: If the budget is exhausted; carries the best iterate.
        SingularJacobian: If a Newton system cannot be solved.
        DomainError: If an iterate leaves the model domain.
    """

    method = FixedPointMethod(method)
    if not tol > 0:
        raise ValidationError("tolerance must be positive")
    if max_iter < 1:
        raise ValidationError("max_iter must be positive")
    x0.require_dim(P.dim)
    tracker = _Tracker()
    used = method
    if method is FixedPointMethod.PICARD:
        x, residual, iterations, ok = _picard(P, x0, tol, max_iter, tracker)
    elif method is FixedPointMethod.NEWTON_FD:
        x, residual, iterations, ok = _newton(P, x0, tol, max_iter, h_rel, tracker)
    else:
        half = max(1, max_iter // 2)
        used = FixedPointMethod.PICARD
        x, residual, iterations, ok = _picard(P, x0, tol, half, tracker)
        if not ok:
            _logger.info("picard stalled, switching to newton", iterations=half)
            used = FixedPointMethod.NEWTON_FD
            x, residual, extra, ok = _newton(
                P, x, tol, max(1, max_iter - half), h_rel, tracker
            )
            iterations += extra
    if not ok:
        raise NoConvergence(max_iter, tracker.best)
    estimate = jacobian_fd(P, x, h_rel)
    rho = spectral_radius(estimate.matrix)
    report = FixedPointReport(
        x_star=x,
        residual=residual,
        iterations=iterations,
        jacobian=estimate.matrix,
        spectral_radius=rho,
        classification=classify_stability(rho),
        method=used,
        one_sided=estimate.flagged,
    )
    _logger.info(
        "fixed point found",
        method=used.value,
        iterations=iterations,
        residual=residual,
        spectral_radius=rho,
    )
    return report
