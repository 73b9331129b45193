import sys

import pytest

from cyclic_covers.spectra import CoverParams


@pytest.fixture
def m30():
    return CoverParams(30, (3, 5, 9, 13))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance")
    for _, line in sorted(mod.REPORT):
        terminalreporter.write_line(line)
