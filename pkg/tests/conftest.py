"""Shared fixtures and the acceptance-summary reporter.

Each test in test_acceptance.py is one acceptance criterion; after the
run, one PASS/FAIL line per criterion is printed so the gate can be read
off the bottom of the log.
"""

from __future__ import annotations

import pytest

_ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    if "test_acceptance.py" not in str(item.fspath):
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _ACCEPTANCE_RESULTS[item.nodeid] = (doc, report.outcome.upper())


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE_RESULTS):
        doc, outcome = _ACCEPTANCE_RESULTS[nodeid]
        status = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{status}  {doc}")
