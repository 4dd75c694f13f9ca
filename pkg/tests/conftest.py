import sys

import pytest

from klbessel.quadrature import DEFAULT_CONFIG


@pytest.fixture(scope="session")
def cfg():
    return DEFAULT_CONFIG


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # render the acceptance verdict lines even when output is captured
    module = sys.modules.get("test_acceptance")
    verdicts = getattr(module, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.write_line(line)
