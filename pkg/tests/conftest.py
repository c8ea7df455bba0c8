import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rectkron import symchar  # noqa: E402

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache(tmp_path_factory):
    cache = tmp_path_factory.mktemp("chartables")
    old = symchar.settings.cache_dir
    symchar.configure(cache_dir=cache, persist=True)
    yield cache
    symchar.configure(cache_dir=old)


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(label, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
