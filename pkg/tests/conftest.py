"""Collects one pass/fail line per acceptance criterion.

Tests tagged ``@pytest.mark.criterion(number, title)`` are summarised at the
end of the run, whatever else was selected.
"""

import pytest

_outcomes: dict[int, tuple[str, bool, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    ok = report.passed and not report.skipped
    if report.when == "setup" and ok:
        return
    _outcomes[number] = (title, ok, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, ok, duration = _outcomes[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number}: {title} ({duration:.2f}s)")
