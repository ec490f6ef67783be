import random

import pytest
from hypothesis import strategies as st

from towertab.core import TowerDiagram

_acceptance: list[tuple[str, str, float]] = []


def diagrams(max_width: int = 8, max_height: int = 6):
    return st.lists(st.integers(0, max_height), max_size=max_width).map(lambda hs: TowerDiagram(tuple(hs)))


def random_diagram(rng: random.Random, max_width: int = 10, max_height: int = 8) -> TowerDiagram:
    width = rng.randint(0, max_width)
    return TowerDiagram(tuple(rng.randint(0, max_height) for _ in range(width)))


@pytest.fixture
def rng():
    return random.Random(20120601)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")
