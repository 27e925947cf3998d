"""Structured pass/fail records emitted by every verification routine."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterator


@dataclass
class CheckReport:
    """Outcome of one check.

    A failed report always carries a counterexample; a passing one never does.
    ``details`` holds sub-reports for aggregate checks. ``elapsed`` is wall time in
    seconds and is the only non-deterministic field; it is left out of
    :meth:`to_dict` unless asked for.
    """

    check: str
    instance: str
    passed: bool
    counterexample: Any = None
    witness: Any = None
    details: list[CheckReport] = field(default_factory=list)
    elapsed: float | None = None

    def __post_init__(self):
        if self.passed and self.counterexample is not None:
            raise ValueError(f"{self.check}: passing report cannot carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError(f"{self.check}: failing report needs a counterexample")

    @classmethod
    def aggregate(cls, check: str, instance: str, details: list[CheckReport], witness=None):
        """Combine sub-reports; the counterexample names the first failing one."""
        failed = [d for d in details if not d.passed]
        counterexample = None
        if failed:
            first = failed[0]
            counterexample = {
                "failed": [d.check for d in failed],
                "first": {"check": first.check, "instance": first.instance,
                          "counterexample": first.counterexample},
            }
        return cls(check, instance, not failed, counterexample, witness, list(details))

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "check": self.check,
            "instance": self.instance,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = [d.to_dict(include_timing) for d in self.details]
        if include_timing and self.elapsed is not None:
            out["elapsed"] = self.elapsed
        return out

    def to_json(self, include_timing: bool = False, **kwargs) -> str:
        kwargs.setdefault("indent", 2)
        return json.dumps(self.to_dict(include_timing), **kwargs)

    def failures(self) -> Iterator[CheckReport]:
        """Yield every failing leaf report, depth first."""
        if self.passed:
            return
        if not self.details:
            yield self
            return
        for d in self.details:
            yield from d.failures()

    def summary_lines(self, depth: int = 0, max_depth: int = 1) -> list[str]:
        mark = "PASS" if self.passed else "FAIL"
        lines = [f"{'  ' * depth}[{mark}] {self.check} ({self.instance})"]
        if not self.passed and not self.details:
            lines.append(f"{'  ' * depth}       counterexample: {self.counterexample}")
        if depth < max_depth or not self.passed:
            for d in self.details:
                lines.extend(d.summary_lines(depth + 1, max_depth))
        return lines


@contextmanager
def timed() -> Iterator[list]:
    """Context manager yielding a one-slot list that receives elapsed seconds."""
    slot = [0.0]
    start = time.perf_counter()
    try:
        yield slot
    finally:
        slot[0] = time.perf_counter() - start
