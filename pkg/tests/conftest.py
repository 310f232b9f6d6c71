import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_LINES] = {}


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            flag = "PASS" if ok else "FAIL"
            lines[number] = f"criterion {number:2d} {flag}  {title} ({elapsed:.2f}s, limit {limit:g}s)"

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
