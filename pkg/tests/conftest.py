import os

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

# criterion number -> list of (ok, line); filled by tests/test_acceptance.py
CRITERIA: dict[int, list[tuple[bool, str]]] = {}


def record(number: int, ok: bool, text: str) -> None:
    CRITERIA.setdefault(number, []).append((ok, text))
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {text}")


@pytest.fixture
def criterion():
    return record


def slow_enabled() -> bool:
    return os.environ.get("HSPECHT_SLOW", "0") == "1"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        parts = CRITERIA[number]
        ok = all(p for p, _ in parts)
        detail = "; ".join(t for _, t in parts)
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
