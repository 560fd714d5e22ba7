import pytest

from transfersys.core import make_transfer_system

_acceptance = []


def complete_four():
    return make_transfer_system(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def two_from_one():
    return make_transfer_system(3, [(1, 2), (1, 3)])


def mixed_system():
    crossing = [(a, b) for a in (1, 2) for b in (5, 6, 7)]
    return make_transfer_system(
        7, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (6, 7)] + crossing
    )


@pytest.fixture
def mixed():
    return mixed_system()


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        doc = getattr(report, "criterion", None) or report.nodeid.split("::")[-1]
        _acceptance.append((report.outcome, doc, report.duration))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and marker.args:
        rep.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for outcome, doc, duration in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {doc} ({duration:.1f}s)")
