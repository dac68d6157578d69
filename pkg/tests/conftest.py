import math

import pytest
from hypothesis import strategies as st

from contarm import PAPER_GEOMETRY, ArmGeometry

# values below come from 30-digit mpmath evaluations of the closed forms
LAMBDA_QUARTER = 0.235549315776005097  # 0.37 / (pi / 2)
L_QUARTER = 0.0141371669411540696  # 0.018 * pi / 4
L1_QUARTER = -0.0282743338823081391  # -0.018 * pi / 2
L_HALF_PI_PHI1 = 0.0155884572681198956  # sqrt(3) / 2 * 0.018

thetas = st.floats(-math.pi, math.pi, allow_nan=False)
bent_phis = st.floats(1e-6, math.pi, allow_nan=False)
xis = st.floats(0.0, 1.0, allow_nan=False)


@pytest.fixture
def geom() -> ArmGeometry:
    return PAPER_GEOMETRY


def angle_diff(a: float, b: float) -> float:
    """Distance between two angles modulo 2 pi."""
    d = (a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        name, ok = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {name}")
