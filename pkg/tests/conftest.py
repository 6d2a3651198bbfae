import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracle_brute  # noqa: E402


@pytest.fixture(scope="session")
def frozen():
    return {(row["p"], row["m"], row["r"]): row for row in oracle_brute.load()}


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = dict(report.user_properties).get("detail", "")
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = (report.outcome, detail, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        outcome, detail, secs = _ACCEPTANCE[name]
        status = "PASS" if outcome == "passed" else outcome.upper()
        label = name.removeprefix("test_criterion_")
        terminalreporter.write_line(f"{status:<6} {label:<28} {secs:7.1f}s  {detail}")
