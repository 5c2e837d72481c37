from __future__ import annotations

import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def acceptance():
    """Record the one-line verdict of an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"[{number}] {'PASS' if ok else 'FAIL'} {detail}"
        _LINES[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
