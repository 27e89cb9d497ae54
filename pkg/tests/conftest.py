from __future__ import annotations

from pathlib import Path

import pytest

from pointline.graph import PointLineGraph, load_graph, parse_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def fixture_graph(name: str) -> PointLineGraph:
    return load_graph(FIXTURES / name)


@pytest.fixture
def three_blocks() -> PointLineGraph:
    return fixture_graph("three_blocks.txt")


@pytest.fixture
def k33() -> PointLineGraph:
    return fixture_graph("k33.txt")


@pytest.fixture
def k4() -> PointLineGraph:
    return fixture_graph("k4_points.txt")


@pytest.fixture
def line_triangle() -> PointLineGraph:
    return fixture_graph("line_triangle.txt")


def graph(text: str) -> PointLineGraph:
    return parse_graph(text)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
