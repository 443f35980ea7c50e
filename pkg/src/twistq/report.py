"""Pass/fail reports shared by the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str = ""
    computed: str = ""
    residual: Any = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        for key in ("expected", "computed", "note"):
            v = getattr(self, key)
            if v:
                d[key] = v
        if self.residual is not None:
            d["residual"] = self.residual
        return d


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, **kw) -> Check:
        c = Check(name, bool(passed), **kw)
        self.checks.append(c)
        return c

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        d = {"title": self.title, "passed": self.passed,
             "checks": [c.to_dict() for c in self.checks]}
        if self.info:
            d["info"] = self.info
        return d

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.title}"]
        for c in self.checks:
            tag = "ok  " if c.passed else "FAIL"
            extra = f"  residual={c.residual}" if c.residual is not None else ""
            lines.append(f"  {tag} {c.name}{extra}")
        return lines


def fmt_float(x: float) -> str:
    """Stable text form for float residuals."""
    return f"{x:.3e}"
