import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
GOLDEN = TESTS / "golden"

sys.path.insert(0, str(TESTS))

from motdec.descriptor import load_descriptor  # noqa: E402

# Filled by test_acceptance.py; printed once at the end of the session.
ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def fixture_path():
    def get(name: str) -> Path:
        return FIXTURES / f"{name}.json"

    return get


@pytest.fixture
def load():
    return lambda name: load_descriptor(FIXTURES / f"{name}.json")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
