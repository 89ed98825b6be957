import pytest

_ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = {}


@pytest.fixture
def acceptance(request):
    """Record ``(criterion, passed, detail, seconds)``; parts of one criterion are merged."""
    table = request.config.stash[_ACCEPTANCE_KEY]

    def record(criterion: int, passed: bool, detail: str, seconds: float) -> None:
        ok, details, secs = table.get(criterion, (True, [], 0.0))
        table[criterion] = (ok and bool(passed), details + [detail], secs + seconds)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = config.stash.get(_ACCEPTANCE_KEY, {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        ok, details, secs = table[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.1f} s) {'; '.join(details)}")
