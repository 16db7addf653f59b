import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from floodit import Board  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def boards(draw, max_h=4, max_n=4, max_c=4, min_c=1):
    h = draw(st.integers(1, max_h))
    n = draw(st.integers(1, max_n))
    c = draw(st.integers(min_c, max_c))
    cells = draw(st.lists(st.integers(1, c), min_size=h * n, max_size=h * n))
    return Board(tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(h)), c)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
