from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latpoly.dataset_io import load_directory  # noqa: E402
from latpoly.polytope import make_polytope  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

SHAPES = {
    "cross2": (2, [(1, 0), (0, 1), (-1, 0), (0, -1)]),
    "hexagon": (2, [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)]),
    "square": (2, [(1, 1), (1, -1), (-1, 1), (-1, -1)]),
    "octahedron": (3, [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]),
    "triangle": (2, [(1, 0), (0, 1), (-1, -1)]),
    "unit_square": (2, [(0, 0), (1, 0), (0, 1), (1, 1)]),
    "long_diamond": (2, [(1, 0), (-1, 0), (0, 2), (0, -2)]),
}


def shape(name):
    d, verts = SHAPES[name]
    return make_polytope(d, verts)


@pytest.fixture
def cross2():
    return shape("cross2")


@pytest.fixture
def hexagon():
    return shape("hexagon")


@pytest.fixture
def square():
    return shape("square")


@pytest.fixture
def octahedron():
    return shape("octahedron")


def fixture_records(rel):
    return load_directory(FIXTURES / rel)


def fixture_polytopes(rel):
    return [(r.id, r.polytope()) for r in fixture_records(rel)]


# one PASS/FAIL line per acceptance criterion in the terminal summary
_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    _acceptance[name] = (outcome, getattr(report, "_doc", ""))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    doc = (getattr(item.function, "__doc__", "") or "").strip().splitlines()
    rep._doc = doc[0] if doc else ""


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        outcome, doc = _acceptance[name]
        terminalreporter.write_line(f"{outcome}  {name}  {doc}")
