import numpy as np
import pytest

from qtomo import DeformationParams


@pytest.fixture(params=[0.3, 0.5, 0.9, 1.0], ids=lambda q: f"q={q}")
def params(request):
    return DeformationParams(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
