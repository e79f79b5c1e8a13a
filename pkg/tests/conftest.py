from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from strategies import ACCEPTANCE_LINES, pres

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

@pytest.fixture
def example_a():
    return pres({0: 4}, {1: 1})

@pytest.fixture
def example_b():
    return pres({0: 1, 2: 2}, {3: 1})

@pytest.fixture
def cubic():
    return pres({0: 1}, {3: 1})
