import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from cutideal.graph_core import Graph, connected_graph_catalog

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

CATALOG_4 = [g for g in connected_graph_catalog(4) if g.m > 0]
CATALOG_5 = list(connected_graph_catalog(5))


@pytest.fixture(scope="session")
def catalog5():
    return CATALOG_5


@pytest.fixture
def chorded_square():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
