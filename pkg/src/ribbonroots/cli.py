"""Command-line interface: ``ribbonroots <subcommand> ...``.

Exit codes: 0 everything passed, 1 a mathematical check failed, 2 usage or
domain error, 3 I/O failure, 4 numerical non-convergence.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .descent import (
    brute_force_descent_count,
    descent_data,
    trivial_part_parts,
)
from .errors import DomainError, NumericalError, ResourceError
from .excited import brute_force_count, enumerate_excited, naruse_count
from .plot import descent_rows, excitation_rows, to_csv, to_svg
from .roots import find_roots
from .shapes import Partition, SkewShape, alpha_vector, as_descent_set, parse_cells
from .sqci import SqciDiagram, check_slice_and_push, check_slice_without_push, sqci_weight
from .suites import SUITES, Budget, SweepConfig, resolve_seed, run_suites, sap_single
from .verdict import _jsonable

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_NUMERIC = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


def _parse_set(text: str):
    try:
        return as_descent_set(text)
    except DomainError as exc:
        raise _UsageError(str(exc)) from exc


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    try:
        parts = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",") if x.strip()]
        return Partition(parts)
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"malformed partition {text!r}") from exc


def _meta(args) -> dict:
    return {"version": __version__, "seed": args.seed_resolved}


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps({**_meta(args), **_jsonable(payload)}, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _budget(args) -> Budget:
    return Budget.parse(args.budget)


# --- subcommands --------------------------------------------------------------

def cmd_descent(args) -> int:
    I = _parse_set(args.set)
    data = descent_data(I)
    num, den = trivial_part_parts(data.shape, I)
    evals = {}
    brute = {}
    cap = _budget(args).permutations
    for n in args.eval or []:
        value = data.polynomial(n)
        if value.denominator != 1:
            raise DomainError(f"d_I({n}) is not an integer: {value}")
        evals[n] = int(value)
        if 1 <= n <= cap:
            brute[n] = brute_force_descent_count(I, n, cap)
    alphas = alpha_vector(data.shape.outer)
    payload = {
        "set": list(I),
        **data.newton.to_dict(),
        "alpha_vector": [str(a) for a in alphas],
        "trivial_num": num.to_strings(),
        "trivial_den": str(den),
        "monomial": data.polynomial.to_strings(),
        "evaluations": {str(n): str(v) for n, v in evals.items()},
        "brute_force": {str(n): str(v) for n, v in brute.items()},
    }
    mismatch = [n for n in brute if brute[n] != evals[n]]
    lines = [
        f"I = {I}   ribbon {data.shape}",
        f"alpha = {tuple(alphas)}",
        f"C = {tuple(data.newton.coeffs)}",
        f"E(t) = {data.newton.to_monomial().pretty('t')}",
        f"T(t) = ({num.pretty('t')}) / {den}",
        f"d_I(N) = {data.polynomial.pretty('N')}",
    ]
    for n, v in evals.items():
        tail = f"   (permutation scan: {brute[n]})" if n in brute else ""
        lines.append(f"d_I({n}) = {v}{tail}")
    _emit(args, payload, lines)
    return EXIT_FAIL if mismatch else EXIT_OK


def cmd_excited(args) -> int:
    try:
        shape = SkewShape.from_json(args.shape)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed shape JSON: {exc}") from exc
    diagrams = enumerate_excited(shape)
    f = naruse_count(shape)
    brute = brute_force_count(shape, _budget(args).syt) if shape.size <= _budget(args).syt else None
    ok = brute is None or brute == f
    payload = {
        "shape": {"outer": list(shape.outer), "inner": list(shape.inner)},
        "diagrams": [{"cells": [str(c) for c in d], "weight": d.weight} for d in diagrams],
        "naruse": f, "brute_force": brute, "holds": ok,
    }
    lines = [f"{d.format()} {d.weight}" for d in diagrams]
    lines.append(f"naruse f = {f}; direct count = {brute if brute is not None else 'skipped'}; "
                 f"{'ok' if ok else 'MISMATCH'}")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sqci(args) -> int:
    lam = _parse_partition(args.lam)
    d = SqciDiagram(tuple(parse_cells(args.circles)), tuple(parse_cells(args.squares or "")), lam)
    if args.slice is None:
        w = sqci_weight(d)
        _emit(args, {"weight": w}, [f"wt = {w}"])
        return EXIT_OK
    check = check_slice_without_push if args.no_push else check_slice_and_push
    v = check(d, args.slice)
    payload = {"lhs": v.lhs, "rhs": v.rhs, "holds": v.holds, "pushed": not args.no_push, "k": args.slice}
    _emit(args, payload, [f"lhs = {v.lhs}", f"rhs = {v.rhs}", f"verdict: {'holds' if v.holds else 'fails'}"])
    # the unpushed inequality is expected to fail in general; report, don't judge
    return EXIT_OK if (v.holds or args.no_push) else EXIT_FAIL


def _root_rows(args):
    I = _parse_set(args.set)
    if not I.elements:
        raise _UsageError("the empty descent set gives a constant polynomial with no roots")
    data = descent_data(I)
    if args.of == "excitation":
        E = data.newton.to_monomial()
        if E.degree < 1:
            return I, data.alpha1, []
        report = find_roots(E)
        return I, data.alpha1, excitation_rows(report, data.alpha1)
    report = find_roots(data.polynomial)
    return I, I.m, descent_rows(report, I.m)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_roots(args) -> int:
    I, m, rows = _root_rows(args)
    if args.csv:
        _write(args.csv, to_csv(rows))
    if args.svg:
        _write(args.svg, to_svg([r.z for r in rows], m, title=f"roots of d_I, I={I}"))
    ok = all(all(r.verdicts.values()) for r in rows)
    payload = {"set": list(I), "of": args.of, "m": m,
               "roots": [{"re": r.z.real, "im": r.z.imag, "modulus": r.modulus,
                          "shifted_modulus": r.shifted_modulus, "verdicts": r.verdicts} for r in rows],
               "holds": ok}
    lines = [f"{r.z.real:+.6f} {r.z.imag:+.6f}i  |z|={r.modulus:.6f}  "
             + " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r.verdicts.items()) for r in rows]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_plot(args) -> int:
    if not args.svg and not args.csv:
        raise _UsageError("plot needs --svg and/or --csv")
    return cmd_roots(args)


def cmd_verify(args) -> int:
    config = SweepConfig(max_m=args.max_m, seed=args.seed_resolved, budget=_budget(args),
                         parallelism=args.jobs)
    names = args.suite or ["all"]
    if "sap" in names and args.lam:
        if not args.circles:
            raise _UsageError("--lambda needs --circles")
        results = [sap_single(_parse_partition(args.lam), parse_cells(args.circles),
                              parse_cells(args.squares or ""), args.k)]
    else:
        if "all" in names:
            names = list(SUITES)
        results = run_suites(names, config)
    passed = all(r.passed for r in results)
    report = {
        "config": {"max_m": config.max_m, "seed": config.seed, "jobs": config.parallelism,
                   "budget": {"syt": config.budget.syt, "permutations": config.budget.permutations}},
        "passed": passed,
        "suites": [r.to_dict() for r in results],
    }
    if args.json:
        print(json.dumps({**_meta(args), **report}, indent=2))
    else:
        print(f"ribbonroots {__version__}  seed={config.seed}  max_m={config.max_m}")
        for r in results:
            extra = ""
            if "lhs" in r.details:
                extra = f"  lhs={r.details['lhs']} rhs={r.details.get('rhs', r.details.get('rhs_unpushed'))}"
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<18} checked={r.checked:<6}"
                  f" {r.elapsed:7.2f}s{extra}")
            for w in r.failures[:5]:
                print(f"      witness: {w}")
    return EXIT_OK if passed else EXIT_FAIL


# --- parser -------------------------------------------------------------------

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument("--seed", type=int, default=d(None), help=f"RNG seed (env {'RIBBONROOTS_SEED'} wins)")
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes for sweeps")
    parser.add_argument("--budget", default=d(None), help="oracle caps, e.g. syt=20,permutations=10")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonroots", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("descent", parents=[common], help="descent polynomial of a set")
    p.add_argument("--set", required=True, help='descent set such as "3,5"; "" for the empty set')
    p.add_argument("--eval", type=int, action="append", metavar="N")
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("excited", parents=[common], help="excited diagrams and Naruse's count")
    p.add_argument("--shape", required=True, help='{"outer":[3,3,3],"inner":[2,2]}')
    p.set_defaults(func=cmd_excited)

    p = sub.add_parser("sqci", parents=[common], help="circle/square weights and slicing")
    p.add_argument("--lambda", dest="lam", required=True, help="[5,5,4,3,2] or 5,5,4,3,2")
    p.add_argument("--circles", required=True, help="row:col cells, e.g. 1:1,1:2")
    p.add_argument("--squares", default="")
    p.add_argument("--slice", type=int, metavar="K")
    p.add_argument("--no-push", action="store_true", help="keep the cut part in place")
    p.set_defaults(func=cmd_sqci)

    for name, func in (("roots", cmd_roots), ("plot", cmd_plot)):
        p = sub.add_parser(name, parents=[common], help="roots of d_I with bound verdicts"
                           if name == "roots" else "write SVG/CSV root plots")
        p.add_argument("--set", required=True)
        p.add_argument("--of", choices=("descent", "excitation"), default="descent")
        p.add_argument("--csv", metavar="PATH")
        p.add_argument("--svg", metavar="PATH")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", action="append", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--circles")
    p.add_argument("--squares")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.seed_resolved = resolve_seed(args.seed)
        return args.func(args)
    except (_UsageError, DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
