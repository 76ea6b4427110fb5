import json

import pytest

from simplicial_hopf import verify
from simplicial_hopf.verify import MUTANTS, SuiteResult, mutant, run_all
from simplicial_hopf.verify.report import MAX_WITNESSES

SMALL = dict(D=3, samples=20, horn_samples=2, fiber_samples=2, search_bound=1)


def test_suite_result_records_exceptions():
    s = SuiteResult("x")
    assert s.check("ok", lambda: True, {})
    assert not s.check("bad", lambda: 1 / 0, {"a": 1})
    assert s.violations[0].witness == {"a": 1, "error": "ZeroDivisionError: division by zero"}
    with s.guard("prep", {"b": 2}):
        raise KeyError("k")
    assert s.violation_count == 2 and s.checks == 3


def test_witness_list_is_capped():
    s = SuiteResult("x")
    for i in range(MAX_WITNESSES + 10):
        s.check("bad", lambda: False, {"i": i})
    assert s.violation_count == MAX_WITNESSES + 10
    assert len(s.violations) == MAX_WITNESSES


def test_report_schema_and_determinism():
    a = run_all(seed=7, **SMALL)
    b = run_all(seed=7, **SMALL)
    assert a.ok
    assert a.dumps() == b.dumps()
    data = json.loads(a.dumps())
    assert data["seed"] == 7 and data["bounds"]["max_degree"] == 3
    for suite in data["suites"]:
        assert set(suite) >= {"name", "checks", "violations"}
    assert run_all(seed=8, **SMALL).dumps() != a.dumps()


def test_run_all_rejects_tiny_degree():
    with pytest.raises(ValueError):
        run_all(D=1)


def test_golden_tables():
    report = verify.run_golden_tables()
    assert report.ok and report.checks == 72 + 8 + 1 + 4


def test_moore_cycles_small_search():
    cycles = verify.moore_two_cycles(1)
    assert cycles
    report = verify.run_bundle_class(2, 1, cycles)
    assert report.ok


def test_mutant_registry():
    assert len(MUTANTS) >= 6
    assert len({m.name for m in MUTANTS}) == len(MUTANTS)
    with pytest.raises(KeyError):
        mutant("no-such-mutant")


@pytest.mark.parametrize("name", ["rewrite-cancel", "eta-trivial-on-y", "tcp-d0-side"])
def test_mutant_detected_and_restored(name):
    with mutant(name).patch():
        report = run_all(seed=42, **SMALL)
    assert not report.ok
    witness = next(v for s in report.suites for v in s.violations)
    json.dumps(witness.to_json())
    assert run_all(seed=42, **SMALL).ok
