import numpy as np
import pytest

import triconflict
from triconflict import SituationTable

from oracles import MIDEAST_AGENTS, MIDEAST_ISSUES, MIDEAST_VALUES


@pytest.fixture(scope="session")
def mideast() -> SituationTable:
    return triconflict.mideast()


@pytest.fixture(scope="session")
def mideast_path() -> str:
    return triconflict.mideast_path()


@pytest.fixture
def raw_mideast():
    return MIDEAST_VALUES, MIDEAST_AGENTS, MIDEAST_ISSUES


def random_table(rng: np.random.Generator, max_agents: int = 12, max_issues: int = 10) -> SituationTable:
    n = int(rng.integers(1, max_agents + 1))
    m = int(rng.integers(1, max_issues + 1))
    return SituationTable.from_matrix(rng.integers(-1, 2, size=(n, m)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
