import sys

import pytest

from subgraph_ef import corpus


@pytest.fixture
def K3():
    return corpus.triangle()


@pytest.fixture
def K4():
    return corpus.k4()


@pytest.fixture
def edge():
    return corpus.single_edge()


@pytest.fixture
def P3():
    return corpus.path3()


CORPUS = corpus.corpus_graphs()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
