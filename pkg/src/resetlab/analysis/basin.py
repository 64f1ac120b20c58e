"""Grid scans of the basin of attraction of a fixed point."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..dynamics.state import StateVector
from ..errors import DomainError, InvalidTarget, ValidationError
from ..logging import get_logger
from ..utils.linalg import sup_norm
from .contraction import Region
from .strobe import StroboscopicMap, map_eval

_logger = get_logger("resetlab.basin")


@dataclass(frozen=True, slots=True)
class BasinGridSpec:
    """Box split into ``resolution[i]`` equal cells along axis ``i``."""

    region: Region
    resolution: tuple[int, ...]

    def __post_init__(self) -> None:
        resolution = tuple(int(n) for n in self.resolution)
        if len(resolution) != self.region.dim or any(n < 1 for n in resolution):
            raise ValidationError("resolution needs one positive count per axis")
        object.__setattr__(self, "resolution", resolution)

    @property
    def bounds(self) -> tuple[tuple[float, float], ...]:
        return tuple(zip(self.region.lo, self.region.hi, strict=True))

    @property
    def cell_volume(self) -> float:
        return math.prod(
            (high - low) / n
            for (low, high), n in zip(self.bounds, self.resolution, strict=True)
        )

    def cell_centres(self) -> list[StateVector]:
        """Cell centres in row-major order (last axis fastest)."""

        axes = [
            low + (np.arange(n) + 0.5) * (high - low) / n
            for (low, high), n in zip(self.bounds, self.resolution, strict=True)
        ]
        return [StateVector(np.array(p)) for p in itertools.product(*axes)]


@dataclass(frozen=True, slots=True)
class BasinCell:
    centre: StateVector
    converged: bool
    iterations: int
    invalid: bool


@dataclass(frozen=True, slots=True)
class BasinGrid:
    """Outcome of :func:`basin_scan`.

    ``measure`` is the converged cell count times the cell volume; invalid
    cells never count.
    """

    spec: BasinGridSpec
    target: StateVector
    cells: tuple[BasinCell, ...]
    measure: float

    @property
    def bounds(self) -> tuple[tuple[float, float], ...]:
        return self.spec.bounds

    @property
    def resolution(self) -> tuple[int, ...]:
        return self.spec.resolution

    @property
    def n_converged(self) -> int:
        return sum(cell.converged for cell in self.cells)

    @property
    def n_invalid(self) -> int:
        return sum(cell.invalid for cell in self.cells)

    @property
    def valid_volume(self) -> float:
        return (len(self.cells) - self.n_invalid) * self.spec.cell_volume


def _scan_cell(
    P: StroboscopicMap,
    centre: StateVector,
    target: StateVector,
    tol: float,
    max_iter: int,
) -> BasinCell:
    if not P.model.in_domain(centre):
        return BasinCell(centre, converged=False, iterations=0, invalid=True)
    x = centre
    for k in range(max_iter + 1):
        if sup_norm(x.values - target.values) <= tol:
            return BasinCell(centre, converged=True, iterations=k, invalid=False)
        if k == max_iter:
            break
        try:
            x = map_eval(P, x)
        except DomainError:
            return BasinCell(centre, converged=False, iterations=k, invalid=True)
    return BasinCell(centre, converged=False, iterations=max_iter, invalid=False)


def basin_scan(
    P: StroboscopicMap,
    grid: BasinGridSpec,
    target: StateVector,
    tol: float,
    max_iter: int,
    workers: int = 1,
) -> BasinGrid:
    """Iterate ``P`` from every cell centre and record convergence to ``target``.

    Args:
        P: Stroboscopic map.
        grid: Box and resolution.
        target: Fixed point of ``P``.
        tol: Distance to ``target`` counted as converged.
        max_iter: Iteration budget per cell.
        workers: Threads used to scan cells; the result does not depend on it.

    Raises:
        InvalidTarget: If ``||P(target) - target||_inf > 10 * tol``.
    """

    if not tol > 0 or max_iter < 0 or workers < 1:
        raise ValidationError("tol must be positive, max_iter and workers positive")
    if grid.region.dim != P.dim:
        raise ValidationError("grid dimension does not match the map")
    target.require_dim(P.dim)
    residual = sup_norm(map_eval(P, target).values - target.values)
    if residual > 10 * tol:
        raise InvalidTarget(
            f"target is not a fixed point: residual {residual:.3e} > {10 * tol:.3e}"
        )
    centres = grid.cell_centres()

    def scan(centre: StateVector) -> BasinCell:
        return _scan_cell(P, centre, target, tol, max_iter)

    if workers == 1:
        cells = [scan(c) for c in centres]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(scan, centres))
    converged = sum(cell.converged for cell in cells)
    measure = converged * grid.cell_volume
    _logger.info(
        "basin scan finished", cells=len(cells), converged=converged, measure=measure
    )
    return BasinGrid(spec=grid, target=target, cells=tuple(cells), measure=measure)
