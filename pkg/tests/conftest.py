from __future__ import annotations

import re

_OUTCOMES: dict[int, tuple[str, str]] = {}
_NAME = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = _NAME.search(report.nodeid)
    if m:
        _OUTCOMES[int(m.group(1))] = ("PASS" if report.passed else "FAIL", m.group(2).replace("_", " "))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        status, label = _OUTCOMES[n]
        terminalreporter.write_line(f"criterion {n:2d} {status}  {label}")
