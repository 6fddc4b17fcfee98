import pytest

_LINES = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number, name, outcome):
        tag = "PASS" if outcome.passed else "FAIL"
        line = f"[{tag}] {number:>2}. {name}: {outcome.summary()}"
        _LINES.append((number, line))
        print(line)
        return outcome.passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
