"""Numerical contraction estimates for the stroboscopic map.

The certificate produced here samples the region on a grid. It is evidence,
not a proof: nothing is said about points between samples.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..constants import DEFAULT_H_REL
from ..dynamics.state import StateVector
from ..errors import DimensionMismatch, DomainError, ValidationError
from ..logging import get_logger
from ..utils.linalg import spectral_norm
from .strobe import StroboscopicMap, jacobian_fd, map_eval

_logger = get_logger("resetlab.contraction")


@dataclass(frozen=True, slots=True)
class Region:
    """Axis-aligned box ``[lo_i, hi_i]``."""

    lo: tuple[float, ...]
    hi: tuple[float, ...]

    def __post_init__(self) -> None:
        lo = tuple(float(v) for v in self.lo)
        hi = tuple(float(v) for v in self.hi)
        if not lo or len(lo) != len(hi):
            raise ValidationError("region bounds must be non-empty and equally long")
        for low, high in zip(lo, hi, strict=True):
            if not (math.isfinite(low) and math.isfinite(high) and low < high):
                raise ValidationError(f"invalid region interval [{low}, {high}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def from_bounds(cls, bounds: Sequence[tuple[float, float]]) -> Region:
        return cls(lo=tuple(b[0] for b in bounds), hi=tuple(b[1] for b in bounds))

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def volume(self) -> float:
        return math.prod(h - l for l, h in zip(self.lo, self.hi, strict=True))

    def contains(self, x: StateVector) -> bool:
        return all(
            low <= value <= high
            for value, low, high in zip(x, self.lo, self.hi, strict=True)
        )

    def sample_points(self, n_samples: int) -> list[StateVector]:
        """Tensor grid with about ``n_samples`` points, boundary included."""

        if n_samples < 1:
            raise ValidationError("n_samples must be positive")
        per_axis = max(2, math.ceil(n_samples ** (1.0 / self.dim)))
        axes = [
            np.linspace(low, high, per_axis)
            for low, high in zip(self.lo, self.hi, strict=True)
        ]
        return [StateVector(np.array(p)) for p in itertools.product(*axes)]


@dataclass(frozen=True, slots=True)
class ContractionEstimate:
    """Sampled Lipschitz estimate of the map over a region.

    ``certified`` is a numerical, non-rigorous statement: ``l_hat < 1`` and
    every sampled image stayed inside the region.
    """

    l_hat: float
    certified: bool
    self_mapping: bool
    n_valid: int
    invalid: tuple[StateVector, ...] = ()
    rigorous: bool = False


def estimate_contraction(
    P: StroboscopicMap,
    region: Region,
    n_samples: int,
    h_rel: float = DEFAULT_H_REL,
) -> ContractionEstimate:
    """Estimate the contraction constant of ``P`` on ``region``.

    ``l_hat`` is the largest spectral norm of the finite-difference Jacobian
    over the sample grid. Samples where the map fails are reported as invalid
    and excluded.
    """

    if region.dim != P.dim:
        raise DimensionMismatch(
            f"region has dimension {region.dim}, map has dimension {P.dim}"
        )
    l_hat = 0.0
    self_mapping = True
    valid = 0
    invalid: list[StateVector] = []
    for point in region.sample_points(n_samples):
        if not P.model.in_domain(point):
            invalid.append(point)
            continue
        try:
            norm = spectral_norm(jacobian_fd(P, point, h_rel).matrix)
            image = map_eval(P, point)
        except DomainError:
            invalid.append(point)
            continue
        valid += 1
        l_hat = max(l_hat, norm)
        if not region.contains(image):
            self_mapping = False
    if invalid:
        _logger.warning("contraction samples failed", count=len(invalid))
    certified = valid > 0 and l_hat < 1.0 and self_mapping
    return ContractionEstimate(
        l_hat=l_hat,
        certified=certified,
        self_mapping=self_mapping,
        n_valid=valid,
        invalid=tuple(invalid),
    )
