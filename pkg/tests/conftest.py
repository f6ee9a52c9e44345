import pytest

from singart.graph import parse_graph
from singart.products import GraphProduct, Kind
from singart.singular import SingularMonoid

P_TEXT = "vertices: a b c\nedges: a-b\n"


@pytest.fixture(scope="session")
def P():
    return parse_graph(P_TEXT)


@pytest.fixture(scope="session")
def M(P):
    return SingularMonoid(P)


@pytest.fixture(scope="session")
def Z(P):
    return GraphProduct(P, Kind.INT)


@pytest.fixture(scope="session")
def N(P):
    return GraphProduct(P, Kind.NAT)


@pytest.fixture(scope="session")
def ZN(P):
    return GraphProduct(P, Kind.INT_NAT)


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
