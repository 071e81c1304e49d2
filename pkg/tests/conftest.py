import pytest

from psiarr.psi_graph import PsiGraph


@pytest.fixture
def p3psi():
    # path v1 - v2 - v3, psi(v1) = {1, 2}, psi(v2) = {1}, psi(v3) = {}
    return PsiGraph.build(3, [(0, 1), (1, 2)], {0: [1, 2], 1: [1]})


@pytest.fixture
def k3():
    return PsiGraph.build(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def split_edge():
    # single edge whose endpoint labels {1} and {2} are incomparable
    return PsiGraph.build(2, [(0, 1)], {0: [1], 1: [2]})


@pytest.fixture
def c4():
    return PsiGraph.build(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def single_labelled():
    return PsiGraph.build(1, [], {0: [1]})


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(LINES):
            terminalreporter.write_line(LINES[k])
