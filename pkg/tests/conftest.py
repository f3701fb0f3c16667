import contextlib

import pytest

_CRITERIA = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL summary line per acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title):
        try:
            yield
        except BaseException as exc:
            _CRITERIA.append((number, "FAIL", f"{title} ({type(exc).__name__}: {str(exc)[:120]})"))
            raise
        _CRITERIA.append((number, "PASS", title))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title in sorted(_CRITERIA, key=lambda x: x[0]):
        terminalreporter.write_line(f"criterion {number}: {status} {title}")
