"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (shown even
under captured output).  Run on its own with
``pytest tests/test_acceptance.py -v``.
"""
import json
import random
import time
from math import comb

import pytest

from simplicial_hopf import clear_caches, gamma, loop_group as lg, ptcp, sampling, twisting as tw
from simplicial_hopf.gamma import ChainComplex, GammaElement, Z2
from simplicial_hopf.loop_group import LoopWord
from simplicial_hopf.verify import MUTANT_BOUNDS, MUTANTS, run_all, run_mutation_controls
from simplicial_hopf.verify import suites as S


@pytest.fixture
def announce(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def default_run():
    clear_caches()
    t0 = time.perf_counter()
    report = run_all(D=6, samples=1000, seed=42)
    return report, time.perf_counter() - t0


def test_1_degree_three_tables(announce):
    clear_caches()
    t0 = time.perf_counter()
    failures, checks = [], 0
    for z in S.GOLDEN_Z:
        for (i, j), is_z in S.GOLDEN_FACES.items():
            got = gamma.gamma_face(Z2, i, GammaElement.symbol(3, (j,), z))
            want = GammaElement.symbol(2, (), z) if is_z else GammaElement.zero(2)
            checks += 1
            if got != want:
                failures.append(("d", i, j, z))
        for (i, j), H in S.GOLDEN_DEGENERACIES.items():
            got = gamma.gamma_degeneracy(Z2, i, GammaElement.symbol(3, (j,), z))
            checks += 1
            if got != GammaElement.symbol(4, H, z):
                failures.append(("s", i, j, z))
    elapsed = time.perf_counter() - t0
    ok = checks == 72 and not failures and elapsed < 1.0
    announce(1, ok, f"{checks} table checks, {len(failures)} mismatches, {elapsed:.3f} s (< 1 s)")


def eta_formula(m, b):
    # independent restatement: class of sigma_J m unless J ends in 0
    if b.cell == tw.POINT or (b.word and b.word[-1] == 0) or m == 0:
        return LoopWord.identity(b.degree - 1)
    return LoopWord(b.degree - 1, ((GammaElement(b.degree, {b.word: (m,)}), 1),))


def test_2_eta_table(announce):
    listed = [(law, simplex(), want) for law, simplex, want in S._golden_eta_table()]
    listed.append(("eta_4(s_i s_0 y) = e", None, None))
    bad = [law for law, b, want in listed[:-1] if tw.eta(1, b) != want]
    if not all(tw.eta(1, tw.s2_degeneracy(i, tw.s2_degeneracy(0, tw.Y))).is_identity for i in range(4)):
        bad.append(listed[-1][0])
    general = 0
    for m in range(-3, 4):
        for n in range(1, 8):
            for b in tw.s2_simplices(n):
                general += 1
                if tw.eta(m, b) != eta_formula(m, b) or tw.eta(m, b) != S.eta_by_recursion(m, b):
                    bad.append(f"general m={m} {b}")
    ok = len(listed) == 8 and not bad
    announce(2, ok, f"{len(listed)} listed values and {general} general-formula checks, {len(bad)} deviations")


def test_3_dold_kan(announce):
    clear_caches()
    t0 = time.perf_counter()
    N = gamma.normalized_chains(Z2, 8)
    ranks = tuple(N.rank(n) for n in range(9))
    zero_d = all(not any(any(row) for row in N.differential(n)) for n in range(1, 9))
    C = ChainComplex({1: 2, 2: 1}, {2: [[2], [3]]})
    roundtrip = gamma.normalized_chains(C, 4) == C
    C3 = ChainComplex({0: 1, 1: 2, 2: 1}, {1: [[1, -1]], 2: [[1], [1]]})
    roundtrip3 = gamma.normalized_chains(C3, 4) == C3
    elapsed = time.perf_counter() - t0
    ok = ranks == (0, 0, 1, 0, 0, 0, 0, 0, 0) and zero_d and roundtrip and roundtrip3 and elapsed < 10
    announce(3, ok, f"ranks {ranks}, zero differentials {zero_d}, N(Gamma C) = C {roundtrip and roundtrip3}, "
                    f"{elapsed:.2f} s (< 10 s)")


def test_4_basis_counts(announce):
    ranks = {n: len(gamma.gamma_basis(Z2, n)) for n in range(2, 13)}
    ranks_ok = all(r == comb(n, n - 2) for n, r in ranks.items())
    gens = {n: lg.single_symbol_generators(n) for n in range(1, 9)}
    counts_ok = all(len(g) == n for n, g in gens.items())
    listed_ok = all(set(gens[n]) == S.GOLDEN_GENERATORS[n] for n in range(1, 5))
    announce(4, ranks_ok and counts_ok and listed_ok,
             f"rank Gamma_n = C(n, n-2) for n <= 12: {ranks_ok}; generator counts = n for n <= 8: {counts_ok}; "
             f"listings through degree 4: {listed_ok}")


LAW_SUITES = ("gamma", "loop-group", "s2", "twisting", "ptcp")


def test_5_law_suites(announce, default_run):
    report, elapsed = default_run
    names = [s.name for s in report.suites]
    counts = {s.name: s.checks for s in report.suites}
    law_ok = all(name in counts and counts[name] >= 1000 for name in LAW_SUITES)
    again = run_all(D=6, samples=1000, seed=42)
    reproducible = again.dumps() == report.dumps()
    ok = law_ok and report.ok and reproducible and elapsed < 60
    detail = ", ".join(f"{n}={counts.get(n)}" for n in LAW_SUITES)
    announce(5, ok, f"{detail}; {report.violation_count} violations over {len(names)} suites; "
                    f"reproducible {reproducible}; {elapsed:.1f} s (< 60 s)")


def test_6_kan_property(announce):
    rng = random.Random("acceptance-6")
    failures, fills, lifts = [], 0, 0
    for n in range(1, 5):
        for k in range(n + 1):
            for _ in range(100):
                g = sampling.random_loop_word(rng, n)
                horn = {i: lg.loop_face(i, g) for i in range(n + 1) if i != k}
                try:
                    f = lg.fill_horn(n, k, horn)
                    fills += 1
                    if any(lg.loop_face(i, f) != h for i, h in horn.items()):
                        failures.append(("fill", n, k))
                except Exception as exc:
                    failures.append(("fill", n, k, repr(exc)))
                m = rng.randint(-2, 2)
                P = ptcp.TwistedProduct(m)
                t = sampling.random_total_simplex(rng, n)
                thorn = {i: P.face(i, t) for i in range(n + 1) if i != k}
                try:
                    lift = P.lift_horn(n, k, thorn, t.base)
                    lifts += 1
                    if lift.base != t.base or any(P.face(i, lift) != h for i, h in thorn.items()):
                        failures.append(("lift", n, k, m))
                except Exception as exc:
                    failures.append(("lift", n, k, m, repr(exc)))
    ok = not failures and fills == lifts == 1400
    announce(6, ok, f"{fills} fills and {lifts} lifts over all (n, k) with n <= 4, {len(failures)} failures")


def test_7_bundle_class(announce):
    degrees = {m: lg.degree_invariant(tw.eta(m, tw.Y)) for m in range(-3, 4)}
    cycles = S.moore_two_cycles(2)
    moore = all(lg.is_moore_cycle(g) for g in cycles)
    killed = all(lg.degree_invariant(lg.loop_face(0, g)) == 0 for g in cycles)
    ok = all(d == m for m, d in degrees.items()) and len(cycles) >= 100 and moore and killed
    announce(7, ok, f"deg eta_m(y) = m for m in -3..3: {all(d == m for m, d in degrees.items())}; "
                    f"{len(cycles)} Moore 2-cycles (>= 100), all with deg d_0 g = 0: {moore and killed}")


def test_8_pullback(announce):
    rng = random.Random("acceptance-8")
    fibers = {n: [sampling.random_loop_word(rng, n) for _ in range(100)] for n in range(7)}
    checks, bad = 0, []
    for m in range(-2, 3):
        P = ptcp.TwistedProduct(m)
        for n in range(7):
            for b in tw.s2_simplices(n):
                for g in fibers[n]:
                    t = ptcp.TotalSimplex(g, b)
                    u = P.to_universal(t)
                    for i in range(n + 1):
                        checks += 1
                        if P.to_universal(P.degeneracy(i, t)) != ptcp.universal_degeneracy(i, u):
                            bad.append((m, "s", i, b))
                        if n >= 1:
                            checks += 1
                            if P.to_universal(P.face(i, t)) != ptcp.universal_face(i, u):
                                bad.append((m, "d", i, b))
    announce(8, not bad, f"{checks} commutation checks for m in -2..2, degree <= 6, 100 fibers; {len(bad)} violations")


def test_9_negative_controls(announce):
    first = run_mutation_controls(seed=42)
    replay = run_mutation_controls(seed=42)
    rows, ok = [], len(MUTANTS) >= 6
    for mt in MUTANTS:
        r = first[mt.name]
        witness = next((v.to_json() for s in r.suites for v in s.violations), None)
        replayed = replay[mt.name].dumps() == r.dumps()
        caught = r.violation_count > 0 and witness is not None and replayed
        json.dumps(witness)
        ok = ok and caught
        rows.append(f"{mt.name}:{r.violation_count}")
    clean = run_all(seed=42, **MUTANT_BOUNDS)
    ok = ok and clean.ok
    announce(9, ok, f"{len(MUTANTS)} mutants, each caught with a replayable witness: {ok}; "
                    f"clean run violations {clean.violation_count}; " + " ".join(rows))
