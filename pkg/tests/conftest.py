import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from commonsearch import ProblemInstance  # noqa: E402


@pytest.fixture
def two_db():
    """n=2, A={1,3}, B={2,3}: a single common entry, 3."""
    return ProblemInstance.from_solution_sets(2, [{1, 3}, {2, 3}])


@pytest.fixture
def three_db():
    return ProblemInstance.from_solution_sets(3, [set(range(8)), {1, 5, 7}, {5, 7}])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.VERDICTS):
        terminalreporter.write_line(line)
