import sys
from pathlib import Path

import hypothesis.strategies as st
import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from skewhowe.partitions import Partition, Rectangle  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@st.composite
def rect_and_partition(draw, max_side=5):
    rows = draw(st.integers(1, max_side))
    cols = draw(st.integers(1, max_side))
    parts = draw(st.lists(st.integers(0, cols), min_size=rows, max_size=rows))
    return Rectangle(rows, cols), Partition(sorted(parts, reverse=True))


_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        _acceptance_results.append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
