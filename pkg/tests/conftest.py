"""Shared pytest plumbing.

Each acceptance-criterion test appends one verdict line to
``criteria_lines``; the terminal-summary hook below prints the collected
lines as a dedicated section so the per-criterion pass/fail verdicts
survive output capture and appear in the teed run log.
"""

criteria_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if criteria_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(criteria_lines):
            terminalreporter.write_line(line)
