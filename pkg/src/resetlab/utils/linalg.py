"""Small linear-algebra helpers for map analysis."""

from __future__ import annotations

import numpy as np

from ..typing import FloatArray


def sup_norm(vector: FloatArray) -> float:
    """Return the maximum absolute entry of ``vector``."""

    if vector.size == 0:
        return 0.0
    return float(np.max(np.abs(vector)))


def spectral_radius(matrix: FloatArray) -> float:
    """Return the largest eigenvalue modulus of a square matrix."""

    return float(np.max(np.abs(np.linalg.eigvals(matrix))))


def spectral_norm(matrix: FloatArray) -> float:
    """Return the operator 2-norm (largest singular value)."""

    return float(np.linalg.norm(matrix, 2))
