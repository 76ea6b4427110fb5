"""Command line front end.

Values are read as inline JSON, ``@path`` or a path to a JSON file, or ``-``
for stdin.  Exit status: 0 on success, 1 when a verification finds
violations, 2 on usage or validation errors.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Any, List, Optional

from . import gamma, loop_group as lg, operators as ops, ptcp, sampling, twisting as tw
from . import verify
from .exceptions import ValidationError, VerificationError
from .gamma import ChainComplex, GammaElement
from .loop_group import LoopWord
from .ptcp import TotalSimplex
from .twisting import BaseSimplex


class UsageError(Exception):
    pass


def _load(text: str, what: str) -> Any:
    source = what
    if text == "-":
        text = sys.stdin.read()
        source = f"{what} (stdin)"
    elif text.startswith("@") or (not text.lstrip().startswith(("{", "[")) and os.path.isfile(text)):
        path = text[1:] if text.startswith("@") else text
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {what} from {path}: {exc}") from exc
        source = f"{what} ({path})"
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"malformed JSON in {source} at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}"
        ) from exc


def _seed(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def _complex(args) -> ChainComplex:
    if args.complex:
        return ChainComplex.from_json(_load(args.complex, "--complex"))
    return gamma.sphere_complex(args.sphere)


def _emit(args, value, text: Optional[str] = None):
    if args.json:
        payload = value.to_json() if hasattr(value, "to_json") else value
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text if text is not None else str(value))


# handlers -----------------------------------------------------------------

def cmd_word_normalize(args):
    w = ops.OperatorWord.parse(args.word, args.src)
    _emit(args, ops.normalize(w))


def cmd_word_enumerate(args):
    words = ops.enumerate_degeneracy_words(args.source, args.degree)
    _emit(args, [w.to_json() for w in words], "\n".join(str(w) for w in words))


def cmd_gamma_basis(args):
    C = _complex(args)
    basis = gamma.gamma_basis(C, args.degree)
    rows = [{"word": list(J), "r": r, "gen": g} for J, r, g in basis]
    text = "\n".join(f"{''.join(f'σ{j}' for j in J) or 'id'} x{g} (r={r})" for J, r, g in basis)
    _emit(args, rows, text or "(empty)")


def cmd_gamma_face(args):
    C = _complex(args)
    x = GammaElement.from_json(_load(args.input, "--input"))
    gamma.check_element(C, x)
    _emit(args, gamma.gamma_face(C, args.index, x))


def cmd_gamma_deg(args):
    C = _complex(args)
    x = GammaElement.from_json(_load(args.input, "--input"))
    gamma.check_element(C, x)
    _emit(args, gamma.gamma_degeneracy(C, args.index, x))


def cmd_gamma_nchains(args):
    C = _complex(args)
    N = gamma.normalized_chains(C, args.max_degree)
    ranks = [N.rank(n) for n in range(args.max_degree + 1)]
    _emit(args, N, f"ranks {ranks}\ndifferentials {N.differentials}")


def _loop(args, text, what="--input") -> LoopWord:
    return LoopWord.from_json(_load(text, what))


def cmd_loop_face(args):
    _emit(args, lg.loop_face(args.index, _loop(args, args.input)))


def cmd_loop_deg(args):
    _emit(args, lg.loop_degeneracy(args.index, _loop(args, args.input)))


def cmd_loop_mul(args):
    if not args.input:
        raise UsageError("loop mul needs at least one --input")
    words = [_loop(args, t) for t in args.input]
    _emit(args, lg.product(words, words[0].degree))


def cmd_loop_fill_horn(args):
    data = _load(args.input, "--input")
    if not isinstance(data, dict):
        raise UsageError("--input must map face indices to loop words")
    faces = {int(i): LoopWord.from_json(w) for i, w in data.items()}
    _emit(args, lg.fill_horn(args.degree, args.missing, faces))


def cmd_loop_degree(args):
    value = lg.degree_invariant(_loop(args, args.input))
    _emit(args, {"degree": value}, str(value))


def cmd_s2_list(args):
    simplices = tw.s2_simplices(args.degree)
    _emit(args, [b.to_json() for b in simplices], "\n".join(str(b) for b in simplices))


def cmd_s2_face(args):
    _emit(args, tw.s2_face(args.index, BaseSimplex.from_json(_load(args.input, "--input"))))


def cmd_s2_deg(args):
    _emit(args, tw.s2_degeneracy(args.index, BaseSimplex.from_json(_load(args.input, "--input"))))


def _klass(args, default=1) -> int:
    return default if args.klass is None else args.klass


def cmd_eta_eval(args):
    b = BaseSimplex.from_json(_load(args.input, "--input"))
    _emit(args, tw.eta(_klass(args), b))


def cmd_twist_check(args):
    m = _klass(args)
    report = tw.check_twisting(lambda b: tw.eta(m, b), args.max_degree)
    payload = {
        "class": m, "max_degree": args.max_degree, "checks": report.checks,
        "violations": [v.to_json() for v in report.violations],
    }
    _emit(args, payload, f"{report.checks} checks, {len(report.violations)} violations")
    return 0 if report.ok else 1


def _total(args, text, what="--input"):
    t, m = TotalSimplex.from_json(_load(text, what))
    return t, _klass(args, m)


def _emit_total(args, t: TotalSimplex, m: int):
    if args.json:
        print(json.dumps(t.to_json(m), sort_keys=True))
    else:
        print(str(t))


def cmd_hopf_face(args):
    t, m = _total(args, args.input)
    _emit_total(args, ptcp.TwistedProduct(m).face(args.index, t), m)


def cmd_hopf_deg(args):
    t, m = _total(args, args.input)
    _emit_total(args, ptcp.TwistedProduct(m).degeneracy(args.index, t), m)


def cmd_hopf_act(args):
    t, m = _total(args, args.input)
    h = _loop(args, args.element, "--element")
    _emit_total(args, ptcp.TwistedProduct(m).act(h, t), m)


def cmd_hopf_project(args):
    t, _ = _total(args, args.input)
    _emit(args, ptcp.TwistedProduct.project(t))


def cmd_hopf_lift_horn(args):
    data = _load(args.input, "--input")
    if not isinstance(data, dict):
        raise UsageError("--input must map face indices to total simplices")
    horn = {}
    classes = set()
    for i, payload in data.items():
        t, m = TotalSimplex.from_json(payload)
        horn[int(i)] = t
        classes.add(m)
    if args.klass is None and len(classes) > 1:
        raise UsageError(f"horn faces disagree on the bundle class: {sorted(classes)}")
    m = _klass(args, classes.pop() if classes else 1)
    base = BaseSimplex.from_json(_load(args.base, "--base"))
    _emit_total(args, ptcp.TwistedProduct(m).lift_horn(args.degree, args.missing, horn, base), m)


def cmd_hopf_to_universal(args):
    t, m = _total(args, args.input)
    u = ptcp.TwistedProduct(m).to_universal(t)
    _emit(args, u, f"({u.fiber}, {u.base})")


def _report_exit(args, report) -> int:
    if args.json:
        print(report.dumps())
    else:
        print(report.summary())
    return 0 if report.ok else 1


def cmd_verify_all(args):
    report = verify.run_all(D=args.max_degree, samples=args.samples, seed=args.seed)
    return _report_exit(args, report)


def cmd_verify_golden(args):
    return _report_exit(args, verify.run_golden_tables())


def cmd_verify_bundle(args):
    classes = [args.klass] if args.klass is not None else list(range(-3, 4))
    cycles = verify.moore_two_cycles(args.search_bound)
    report = verify.VerificationReport(seed=None, bounds={"search_bound": args.search_bound})
    for m in classes:
        report.merge(verify.run_bundle_class(m, args.search_bound, cycles))
    return _report_exit(args, report)


def cmd_verify_mutants(args):
    results = verify.run_mutation_controls(seed=args.seed)
    rows = []
    for m in verify.MUTANTS:
        r = results[m.name]
        first = next((v.to_json() for s in r.suites for v in s.violations), None)
        rows.append({"mutant": m.name, "description": m.description, "detected": not r.ok,
                     "violations": r.violation_count, "first_witness": first})
    missed = [row["mutant"] for row in rows if not row["detected"]]
    if args.json:
        print(json.dumps({"mutants": rows, "missed": missed}, sort_keys=True))
    else:
        for row in rows:
            print(f"{row['mutant']:<26} {'detected' if row['detected'] else 'MISSED':<9} {row['violations']} violations")
    return 1 if missed else 0


def cmd_export_model(args):
    m = _klass(args)
    rng = random.Random(f"{args.seed}:export")
    degrees = []
    for n in range(args.max_degree + 1):
        fibers: List[LoopWord] = [LoopWord.identity(n)]
        for _ in range(10 * args.fiber_samples):
            if len(fibers) >= args.fiber_samples:
                break
            w = sampling.random_loop_word(rng, n)
            if w not in fibers:
                fibers.append(w)
        bases = tw.s2_simplices(n)
        simplices = [TotalSimplex(g, b) for b in bases for g in fibers]
        degrees.append({
            "deg": n, "base_count": len(bases), "fiber_count": len(fibers),
            "simplices": [t.to_json(m) for t in simplices],
        })
    payload = {"class": m, "max_degree": args.max_degree, "degrees": degrees}
    text = "\n".join(f"degree {d['deg']}: {d['base_count']} base simplices x {d['fiber_count']} fibers" for d in degrees)
    _emit(args, payload, text)


# parser -------------------------------------------------------------------

GLOBAL_DEFAULTS = {"json": True, "seed": 42, "max_degree": 6, "samples": 1000, "klass": None}


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's copy of a global flag from clobbering one given earlier
    common = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    common.add_argument("--json", dest="json", action="store_true", default=S,
                        help="JSON output (the default)")
    common.add_argument("--text", dest="json", action="store_false", default=S, help="human-readable output")
    common.add_argument("--seed", type=_seed, default=S, help="random seed (default 42)")
    common.add_argument("--max-degree", dest="max_degree", type=int, default=S, help="default 6")
    common.add_argument("--samples", type=int, default=S, help="default 1000")
    common.add_argument("--class", dest="klass", type=int, default=S, help="bundle class m (default 1)")

    gamma_opts = argparse.ArgumentParser(add_help=False)
    gamma_opts.add_argument("--sphere", type=int, default=2, help="use Z(k) (default Z(2))")
    gamma_opts.add_argument("--complex", help="chain complex as JSON {\"ranks\":..., \"differentials\":...}")

    parser = argparse.ArgumentParser(prog="simplicial-hopf", description=__doc__.splitlines()[0], parents=[common])
    top = parser.add_subparsers(dest="group", required=True)

    def group(name, help_text):
        g = top.add_parser(name, help=help_text)
        return g.add_subparsers(dest="command", required=True)

    def leaf(sub, name, func, *parents, **kw):
        p = sub.add_parser(name, parents=[common, *parents], **kw)
        p.set_defaults(func=func)
        return p

    word = group("word", "face/degeneracy operator words")
    p = leaf(word, "normalize", cmd_word_normalize)
    p.add_argument("word", help='e.g. "s0 s1"')
    p.add_argument("--src", type=int, required=True, help="source degree")
    p = leaf(word, "enumerate", cmd_word_enumerate)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    g = group("gamma", "the simplicial abelian group Gamma(C)")
    p = leaf(g, "basis", cmd_gamma_basis, gamma_opts)
    p.add_argument("--degree", type=int, required=True)
    for name, func in (("face", cmd_gamma_face), ("deg", cmd_gamma_deg)):
        p = leaf(g, name, func, gamma_opts)
        p.add_argument("--index", type=int, required=True)
        p.add_argument("--input", required=True)
    leaf(g, "nchains", cmd_gamma_nchains, gamma_opts)

    lp = group("loop", "the loop group G Gamma Z(2)")
    for name, func in (("face", cmd_loop_face), ("deg", cmd_loop_deg)):
        p = leaf(lp, name, func)
        p.add_argument("--index", type=int, required=True)
        p.add_argument("--input", required=True)
    p = leaf(lp, "mul", cmd_loop_mul)
    p.add_argument("--input", action="append", help="repeat for each factor, left to right")
    p = leaf(lp, "fill-horn", cmd_loop_fill_horn)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--missing", type=int, required=True)
    p.add_argument("--input", required=True, help='{"i": <LoopWord>, ...} for i != missing')
    p = leaf(lp, "degree", cmd_loop_degree)
    p.add_argument("--input", required=True)

    s2 = group("s2", "the minimal simplicial 2-sphere")
    p = leaf(s2, "list", cmd_s2_list)
    p.add_argument("--degree", type=int, required=True)
    for name, func in (("face", cmd_s2_face), ("deg", cmd_s2_deg)):
        p = leaf(s2, name, func)
        p.add_argument("--index", type=int, required=True)
        p.add_argument("--input", required=True)

    et = group("eta", "the twisting eta_m")
    p = leaf(et, "eval", cmd_eta_eval)
    p.add_argument("--input", required=True)

    tws = group("twist", "twisting-function checks")
    leaf(tws, "check", cmd_twist_check)

    hopf = group("hopf", "the twisted product G Gamma Z(2) x_eta S^2")
    for name, func in (("face", cmd_hopf_face), ("deg", cmd_hopf_deg)):
        p = leaf(hopf, name, func)
        p.add_argument("--index", type=int, required=True)
        p.add_argument("--input", required=True)
    p = leaf(hopf, "act", cmd_hopf_act)
    p.add_argument("--element", required=True, help="LoopWord acting on the right of the fiber")
    p.add_argument("--input", required=True)
    p = leaf(hopf, "project", cmd_hopf_project)
    p.add_argument("--input", required=True)
    p = leaf(hopf, "lift-horn", cmd_hopf_lift_horn)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--missing", type=int, required=True)
    p.add_argument("--input", required=True, help='{"i": <TotalSimplex>, ...} for i != missing')
    p.add_argument("--base", required=True, help="base filler (BaseSimplex)")
    p = leaf(hopf, "to-universal", cmd_hopf_to_universal)
    p.add_argument("--input", required=True)

    v = group("verify", "verification suites")
    leaf(v, "all", cmd_verify_all)
    leaf(v, "golden", cmd_verify_golden)
    p = leaf(v, "bundle", cmd_verify_bundle)
    p.add_argument("--search-bound", dest="search_bound", type=int, default=2)
    leaf(v, "mutants", cmd_verify_mutants)

    ex = group("export", "export finite pieces of the model")
    p = leaf(ex, "model", cmd_export_model)
    p.add_argument("--fiber-samples", dest="fiber_samples", type=int, default=3)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        status = args.func(args)
    except (UsageError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 1
    return 0 if status is None else status


if __name__ == "__main__":
    sys.exit(main())
