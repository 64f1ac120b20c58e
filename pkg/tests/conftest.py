from __future__ import annotations

import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from resetlab.analysis import StroboscopicMap  # noqa: E402
from resetlab.models import build_model  # noqa: E402
from resetlab.resets import ScalarScale  # noqa: E402


@pytest.fixture
def gompertz_map() -> StroboscopicMap:
    """Gompertz flow with alpha = 1 followed by scaling with 0.67 every unit."""

    return StroboscopicMap(
        build_model("gompertz", alpha=1.0), ScalarScale(period=1.0, gamma=0.67)
    )
