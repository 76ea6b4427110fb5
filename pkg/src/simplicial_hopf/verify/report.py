from __future__ import annotations

import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Union

# Violations kept per suite; the total is always counted.
MAX_WITNESSES = 25

Witness = Union[Dict[str, Any], Callable[[], Dict[str, Any]]]


@dataclass
class Violation:
    law: str
    witness: Dict[str, Any]

    def to_json(self) -> dict:
        return {"law": self.law, "witness": self.witness}


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    violation_count: int = 0
    violations: List[Violation] = field(default_factory=list)

    def check(self, law: str, test: Callable[[], bool], witness: Witness) -> bool:
        """Run one check. Exceptions count as violations and are recorded in the witness."""
        self.checks += 1
        error = None
        try:
            ok = bool(test())
        except Exception as exc:  # a crash inside a law check is a violation, not an abort
            ok = False
            error = f"{type(exc).__name__}: {exc}"
        if not ok:
            self.violation_count += 1
            if len(self.violations) < MAX_WITNESSES:
                try:
                    w = dict(witness() if callable(witness) else witness)
                except Exception as exc:
                    w = {"unencodable": f"{type(exc).__name__}: {exc}"}
                if error:
                    w["error"] = error
                self.violations.append(Violation(law, w))
        return ok

    @contextmanager
    def guard(self, law: str, witness: Witness = None):
        """Record an exception raised while preparing checks as a violation."""
        try:
            yield
        except Exception as exc:
            def reraise():
                raise exc

            self.check(law, reraise, witness or {})

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checks": self.checks,
            "violation_count": self.violation_count,
            "violations": [v.to_json() for v in self.violations],
        }


@dataclass
class VerificationReport:
    seed: Any = None
    bounds: Dict[str, Any] = field(default_factory=dict)
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def violation_count(self) -> int:
        return sum(s.violation_count for s in self.suites)

    @property
    def checks(self) -> int:
        return sum(s.checks for s in self.suites)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def suite(self, name: str) -> SuiteResult:
        for s in self.suites:
            if s.name == name:
                return s
        raise KeyError(name)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.suites.extend(other.suites)
        return self

    def to_json(self) -> dict:
        return {"seed": self.seed, "bounds": self.bounds, "suites": [s.to_json() for s in self.suites]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary(self) -> str:
        lines = []
        for s in self.suites:
            status = "ok" if s.ok else f"FAIL ({s.violation_count} violations)"
            lines.append(f"{s.name:<20} {s.checks:>8} checks  {status}")
            for v in s.violations[:3]:
                lines.append(f"    {v.law}: {json.dumps(v.witness, sort_keys=True)[:300]}")
        lines.append(f"{'total':<20} {self.checks:>8} checks  {self.violation_count} violations")
        return "\n".join(lines)
