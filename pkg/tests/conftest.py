import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per end-to-end criterion; echoed in the
    terminal summary so plain pytest runs show them."""

    def record(num, name, ok, secs):
        line = "ACCEPTANCE %02d %-32s %s (%.2fs)" % (
            num, name, "PASS" if ok else "FAIL", secs)
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
