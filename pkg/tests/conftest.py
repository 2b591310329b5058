import pytest

from beiblock.generate import two_flower_example


@pytest.fixture
def two_flower_graph():
    """Two flowers joined by an edge: v1 = 1 (two triangles), v2 = 2 (three triangles)."""
    return two_flower_example()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
