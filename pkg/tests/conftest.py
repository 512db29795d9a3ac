import sys

import pytest

from convlab.harness.fixtures import fix_chain, fix_disc2, fix_overlap, fix_ultra


@pytest.fixture
def chain():
    return fix_chain()


@pytest.fixture
def ultra():
    return fix_ultra()


@pytest.fixture
def overlap():
    return fix_overlap()


@pytest.fixture
def disc2():
    return fix_disc2()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
