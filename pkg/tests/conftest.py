import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from connspace.core import ConnectivitySpace, make_An  # noqa: E402


@pytest.fixture
def borromean():
    return ConnectivitySpace.from_sets(3, [{1, 2, 3}])


@pytest.fixture
def fig1():
    """Borromean rings of Borromean rings."""
    return ConnectivitySpace.from_sets(9, [{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, range(1, 10)])


@pytest.fixture
def a4():
    return make_An(4)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, title = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
