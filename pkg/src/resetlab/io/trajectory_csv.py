"""CSV representation of hybrid trajectories.

The header is ``t,tag,x0,...,x{d-1}``. Rows are in time order; at a reset
time the ``left_limit`` row comes immediately before the ``post_reset`` row
with the same time stamp. Values are written with ``precision`` significant
digits; at 17 digits reading the file reproduces every float exactly.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

import numpy as np

from ..constants import DEFAULT_PRECISION
from ..dynamics.state import StateVector
from ..errors import ParseError
from ..resets.hybrid import HybridSample, HybridTrajectory, SampleTag


def format_real(value: float, precision: int = DEFAULT_PRECISION) -> str:
    return format(float(value), f".{precision}g")


def header(dim: int) -> list[str]:
    return ["t", "tag", *(f"x{i}" for i in range(dim))]


def dumps_trajectory(
    trajectory: HybridTrajectory, precision: int = DEFAULT_PRECISION
) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header(trajectory.dim))
    for sample in trajectory.samples:
        writer.writerow(
            [
                format_real(sample.t, precision),
                sample.tag.value,
                *(format_real(v, precision) for v in sample.state),
            ]
        )
    return buffer.getvalue()


def write_trajectory(
    path: Path | str,
    trajectory: HybridTrajectory,
    precision: int = DEFAULT_PRECISION,
) -> Path:
    """Write ``trajectory`` to ``path`` and return the path."""

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps_trajectory(trajectory, precision), encoding="utf-8")
    return target


def loads_trajectory(text: str) -> HybridTrajectory:
    """Parse CSV text produced by :func:`dumps_trajectory`.

    Raises:
        ParseError: With the offending line number.
    """

    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ParseError("trajectory file is empty", line=1)
    columns = rows[0]
    if len(columns) < 3 or columns[:2] != ["t", "tag"]:
        raise ParseError("header must start with t,tag,x0", line=1)
    dim = len(columns) - 2
    if columns != header(dim):
        raise ParseError(f"unexpected header {','.join(columns)}", line=1)
    samples: list[HybridSample] = []
    reset_times: list[float] = []
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != dim + 2:
            raise ParseError(f"expected {dim + 2} fields, got {len(row)}", line=number)
        try:
            t = float(row[0])
            tag = SampleTag(row[1])
            state = StateVector(np.array([float(v) for v in row[2:]]))
        except ValueError as exc:
            raise ParseError(str(exc), line=number) from exc
        samples.append(HybridSample(t, state, tag))
        if tag is SampleTag.POST_RESET:
            reset_times.append(t)
    if not samples:
        raise ParseError("trajectory file has no samples", line=1)
    return HybridTrajectory(samples=tuple(samples), reset_times=tuple(reset_times))


def read_trajectory(path: Path | str) -> HybridTrajectory:
    return loads_trajectory(Path(path).read_text(encoding="utf-8"))
