"""Structured pass/fail records returned by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    identity: str
    inputs: str
    lhs: str
    rhs: str
    passed: bool

    def line(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"[{mark}] {self.identity} {self.inputs}: {self.lhs} vs {self.rhs}"


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    def compare(self, identity: str, inputs, lhs, rhs) -> bool:
        """Record ``lhs == rhs`` with both sides rendered as exact strings."""
        ok = lhs == rhs
        self.checks.append(Check(identity, _fmt(inputs), str(lhs), str(rhs), bool(ok)))
        return bool(ok)

    def extend(self, other: Report | list[Check]) -> Report:
        self.checks.extend(other.checks if isinstance(other, Report) else other)
        return self

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def __len__(self) -> int:
        return len(self.checks)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({len(self.checks)} checks, {len(self.failures)} failures)"


def _fmt(inputs) -> str:
    if isinstance(inputs, dict):
        return "(" + ", ".join(f"{k}={_fmt_value(v)}" for k, v in inputs.items()) + ")"
    return str(inputs)


def _fmt_value(v) -> str:
    if isinstance(v, tuple) and all(isinstance(p, int) for p in v):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)
