"""Verification reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Failure:
    """One instance where an identity did not hold."""
    input: Any
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"input": self.input, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    """Outcome of running one suite over a parameter sweep."""
    suite: str
    params: dict = field(default_factory=dict)
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, input: Any, expected: Any, actual: Any) -> None:
        self.instances += 1
        if expected != actual:
            self.failures.append(Failure(input, expected, actual))

    def merge(self, other: VerificationReport) -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        failures = sorted((f.to_json() for f in self.failures), key=lambda f: json.dumps(f, sort_keys=True))
        return {
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "failure_count": len(self.failures),
            "passed": self.passed,
            "failures": failures,
        }

    def format(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"[{mark}] {self.suite}: {self.instances} instances, {len(self.failures)} failures"
        for failure in self.failures[:10]:
            text += f"\n  input={failure.input} expected={failure.expected} actual={failure.actual}"
        if len(self.failures) > 10:
            text += f"\n  ... {len(self.failures) - 10} more"
        return text
