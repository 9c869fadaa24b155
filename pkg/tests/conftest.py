import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_RESULTS: dict[int, list[tuple[bool, str]]] = {}
_TITLES: dict[int, str] = {}


@pytest.fixture(scope="session")
def reference_orders():
    return json.loads((DATA / "reference_orders.json").read_text())


@pytest.fixture(scope="session")
def per_start_tables():
    return json.loads((DATA / "per_start_tables.json").read_text())


@pytest.fixture
def record():
    """Record one part of an acceptance criterion: ``record(n, title, ok, detail)``."""

    def _record(n: int, title: str, ok: bool, detail: str = "") -> bool:
        _TITLES[n] = title
        _RESULTS.setdefault(n, []).append((bool(ok), detail))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        parts = _RESULTS[n]
        ok = all(p for p, _ in parts)
        failed = [d for p, d in parts if not p]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {_TITLES[n]}"
        if failed:
            line += "  -- " + "; ".join(failed)
        terminalreporter.write_line(line)
