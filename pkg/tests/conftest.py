from functools import lru_cache

import pytest

from diffspec.field import build_field

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = {}


@lru_cache(maxsize=None)
def field(p, n, repr_hint=None):
    return build_field(p, n, repr_hint)


@pytest.fixture
def F7():
    return field(7, 1)


@pytest.fixture
def F9():
    return field(3, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[num])
