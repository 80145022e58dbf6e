import pytest

_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Print one PASS/FAIL line for an acceptance criterion and assert on it."""

    def report(number: int, title: str, problems: list[str]):
        ok = not problems
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
        if problems:
            shown = "; ".join(problems[:8])
            more = f" (+{len(problems) - 8} more)" if len(problems) > 8 else ""
            line += f" -- {shown}{more}"
        print(line)
        _LINES.append(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
