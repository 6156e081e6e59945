from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from tests import test_acceptance
    except ImportError:
        return
    records = getattr(test_acceptance, "RESULTS", {})
    if not records:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(records):
        status, elapsed, detail = records[number]
        terminalreporter.write_line(
            f"criterion {number:>2}: {status:4s} ({elapsed:6.2f}s)  {detail}"
        )
