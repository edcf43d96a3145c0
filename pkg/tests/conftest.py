"""Shared fixtures plus the per-criterion PASS/FAIL summary for the acceptance suite."""

import pathlib
from collections import defaultdict

import pytest

DATA = pathlib.Path(__file__).parent / "data"

_criterion_of: dict = {}
_outcomes: dict = defaultdict(dict)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    crit = _criterion_of.get(report.nodeid)
    if crit is None:
        return
    name = report.nodeid.split("::")[-1]
    if report.failed:
        _outcomes[crit][name] = False
    elif report.when == "call":
        _outcomes[crit].setdefault(name, True)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_outcomes):
        tests = _outcomes[crit]
        failed = sorted(n for n, ok in tests.items() if not ok)
        line = f"criterion {crit}: {'FAIL' if failed else 'PASS'}"
        if failed:
            line += "  (failing: " + ", ".join(failed) + ")"
        terminalreporter.write_line(line)


@pytest.fixture
def data_dir():
    return DATA


def read_data(name: str) -> str:
    return (DATA / name).read_text()
