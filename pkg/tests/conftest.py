"""Shared pytest wiring.

Collects the one-line acceptance verdicts emitted by test_acceptance.py
and prints them as a block after the run, so the per-criterion outcome
is visible regardless of output capture.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
