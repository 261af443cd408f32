import pytest

from kcritical.params import derive_params


@pytest.fixture
def P63():
    return derive_params(6, 3)


@pytest.fixture
def P129():
    return derive_params(12, 9)


@pytest.fixture
def P105():
    return derive_params(10, 5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
