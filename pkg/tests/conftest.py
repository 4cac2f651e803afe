import sys
from pathlib import Path

import pytest

from dhmyerson.game import CardinalityPowerGame
from dhmyerson.hypergraph import DirectedHypergraph

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "golden"


def example_graph():
    return DirectedHypergraph.from_lists(
        5, [([1], [2]), ([2], [1]), ([2, 3], [4]), ([3, 4, 5], [1])]
    )


@pytest.fixture
def example():
    return example_graph()


@pytest.fixture
def card1():
    return CardinalityPowerGame(5, 1)


@pytest.fixture
def card2():
    return CardinalityPowerGame(5, 2)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS):
        terminalreporter.write_line(line)
