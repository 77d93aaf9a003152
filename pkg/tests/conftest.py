import pytest

_criteria: list[tuple[str, bool]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary prints them all at the end."""

    def record(label: str, ok: bool) -> bool:
        _criteria.append((label, bool(ok)))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}")
