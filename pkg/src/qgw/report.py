"""Common report type for the verification routines.

A report collects named failures instead of raising: callers decide whether
a nonzero residual is an error or the expected outcome of a negative check.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what):
        self.checked += 1
        if not ok:
            self.failures.append(what)

    def merge(self, other: "CheckReport"):
        self.checked += other.checked
        self.failures.extend((other.name, f) for f in other.failures)

    def __str__(self):
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"[{self.name}] {self.checked} checks, {status}"
