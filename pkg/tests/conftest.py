import pytest

from circalg.graphs import cycle_graph


@pytest.fixture
def triangle():
    """3-cycle with edges 0->1, 1->2, 2->0."""
    return cycle_graph(3)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
