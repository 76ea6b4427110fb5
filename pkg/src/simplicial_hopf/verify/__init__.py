"""Verification suites, reports, and negative controls."""
from __future__ import annotations

from typing import Any, Dict, Optional

from .mutants import MUTANTS, Mutant, mutant
from .report import SuiteResult, VerificationReport, Violation
from .suites import delta_canonical, moore_two_cycles, run_all, run_bundle_class, run_golden_tables

# Smaller bounds for mutant runs; every mutant is caught well inside them.
MUTANT_BOUNDS = dict(D=4, samples=60, horn_samples=3, fiber_samples=2, search_bound=1)


def run_mutation_controls(seed: Any = 42, bounds: Optional[Dict[str, Any]] = None) -> Dict[str, VerificationReport]:
    """Run ``run_all`` once under each mutant; a mutant is caught if its report has violations."""
    kwargs = dict(MUTANT_BOUNDS if bounds is None else bounds)
    out = {}
    for m in MUTANTS:
        with m.patch():
            out[m.name] = run_all(seed=seed, **kwargs)
    return out


__all__ = [
    "MUTANTS", "Mutant", "mutant", "SuiteResult", "VerificationReport", "Violation",
    "delta_canonical", "moore_two_cycles", "run_all", "run_bundle_class", "run_golden_tables",
    "run_mutation_controls",
]
