import math

import numpy as np
import pytest
from hypothesis import strategies as st

OMEGA_A = (0, math.pi / 2, math.pi / 2, math.pi, 0, math.pi / 2, math.pi / 2, math.pi)
OMEGA_B = (0, math.pi / 2, 0, math.pi / 2, 0, math.pi / 2, 0, 0)
OMEGA_C = (0, math.pi / 2, math.pi / 2, 2 * math.acos(1 / math.sqrt(3)), 0, math.pi / 2, 0, 0)

angles = st.floats(min_value=0.0, max_value=2 * math.pi, allow_nan=False)
omegas = st.tuples(*[angles] * 8)
small = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
complex_entries = st.builds(complex, small, small)
matrices3 = st.lists(complex_entries, min_size=9, max_size=9).map(
    lambda xs: np.array(xs, dtype=complex).reshape(3, 3)
)
carriers = st.floats(min_value=-1.0, max_value=1.0)
widths = st.floats(min_value=0.05, max_value=1.0)
delays = st.floats(min_value=-5.0, max_value=5.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_complex(rng, n=3):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


# -- acceptance report -------------------------------------------------------

_REPORT = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line; lines are echoed now and in the summary."""
    lines = request.config.stash.setdefault(_REPORT, [])

    def record(label: str, passed: bool, detail: str) -> bool:
        line = f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}"
        lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_REPORT, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
