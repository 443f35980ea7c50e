from __future__ import annotations

import time

import pytest

# criterion number -> (title, passed, detail lines)
ACCEPTANCE: dict[int, tuple[str, bool, list[str]]] = {}
_START = time.perf_counter()
WALL_CLOCK_LIMIT = 300.0


@pytest.fixture
def record():
    def _record(n: int, title: str, parts: list[tuple[str, bool, str]]):
        ok = all(p for _, p, _ in parts)
        lines = [f"{'ok  ' if p else 'FAIL'} {name}: {detail}" for name, p, detail in parts]
        ACCEPTANCE[n] = (title, ok, lines)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {title}")
        for line in lines:
            print("    " + line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    elapsed = time.perf_counter() - _START
    for n in sorted(ACCEPTANCE):
        title, ok, lines = ACCEPTANCE[n]
        if n == 10:
            clock_ok = elapsed < WALL_CLOCK_LIMIT
            lines = lines + [f"{'ok  ' if clock_ok else 'FAIL'} session wall-clock: "
                             f"{elapsed:.1f} s (limit {WALL_CLOCK_LIMIT:.0f} s)"]
            ok = ok and clock_ok
        tr.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} {title}")
        for line in lines:
            tr.write_line("    " + line)
