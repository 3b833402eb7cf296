"""Command-line front end.

Subcommands: cohomology, model, massey, classify, table, verify-paper.
Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed check.
Results go to standard output, diagnostics to standard error; JSON output
is a single compact document with a fixed key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import run_all
from .classify import classify, cross_check
from .massey import MasseyResult, triple_massey
from .model import (BundleModel, build_model, class_from_string,
                    model_cohomology, representative_string)
from .poly import format_polynomial
from .quotient import degree_basis
from .spaces import (EXCEPTIONAL, GRASSMANN_REAL_R8, EulerClassSpec, SpaceId,
                     format_euler, format_space, homogeneous_euler,
                     parse_euler, parse_space, presentation)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="wolfform",
                     description="Exact cohomology and formality of "
                                 "3-sphere bundles over the built-in spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space(p, euler=True):
        p.add_argument("--space", required=True,
                       help="gr-c:n=<int>, gr-r:n=<int>, gi, fi, eii, evi, "
                            "eix, sphere:k=<int>, rp:k=<int>")
        if euler:
            p.add_argument("--euler", default="homogeneous",
                           help="a=<rat>,b=<rat>[,c=<rat>] or 'homogeneous'")

    p = sub.add_parser("cohomology", help="Betti numbers and bases of the base ring")
    add_space(p, euler=False)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("model", help="cohomology of the 3-sphere bundle model")
    add_space(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("massey", help="triple Massey product of three classes")
    add_space(p)
    p.add_argument("classes", nargs=3, metavar="CLASS",
                   help="polynomial over the base generators, optionally "
                        "with a *u part (prefix negative inputs with --)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="formality verdict with witness")
    add_space(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="verdict grid with engine cross-check")
    add_space(p, euler=False)
    p.add_argument("--grid", default="-2..2", help="inclusive range lo..hi")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-paper", help="run the full reproduction suite")
    p.add_argument("--json", action="store_true")
    return parser


def _emit_json(document) -> None:
    print(json.dumps(document, separators=(",", ":")))


def _resolve_euler(space: SpaceId, text: str) -> EulerClassSpec:
    spec = parse_euler(text)
    return homogeneous_euler(space) if spec is None else spec


def _witness_document(model: BundleModel, witness: MasseyResult | None):
    if witness is None:
        return None
    return {
        "inputs": [representative_string(model, c) for c in witness.inputs],
        "trivial": witness.trivial,
        "representative": representative_string(model, witness.representative),
        "indeterminacy_dim": witness.indeterminacy_dim,
    }


def _cmd_cohomology(args) -> int:
    space = parse_space(args.space)
    ring = presentation(space)
    top = ring.formal_dimension
    if args.max_degree is not None:
        top = min(top, max(args.max_degree, 0))
    numbers = [degree_basis(ring, k).dim for k in range(top + 1)]
    if args.json:
        _emit_json({"betti": numbers})
        return 0
    print(f"space: {format_space(space)}")
    print(f"formal dimension: {ring.formal_dimension}")
    print("betti:", " ".join(str(v) for v in numbers))
    for k in range(top + 1):
        basis = degree_basis(ring, k)
        if basis.dim:
            names = ", ".join(
                format_polynomial(basis.polynomial(
                    tuple(1 if i == j else 0 for i in range(basis.dim))))
                for j in range(basis.dim))
            print(f"H^{k} = <{names}>")
    return 0


def _cmd_model(args) -> int:
    space = parse_space(args.space)
    euler = _resolve_euler(space, args.euler)
    model = build_model(space, euler)
    top = model.formal_dimension
    if args.max_degree is not None:
        top = min(top, max(args.max_degree, 0))
    numbers = [model_cohomology(model, k).dim for k in range(top + 1)]
    generators = {}
    for k in range(top + 1):
        cohom = model_cohomology(model, k)
        if cohom.dim:
            generators[str(k)] = [representative_string(model, r)
                                  for r in cohom.representatives]
    if args.json:
        _emit_json({
            "space": format_space(space),
            "euler": format_polynomial(model.euler),
            "betti": numbers,
            "generators_by_degree": generators,
        })
        return 0
    print(f"space: {format_space(space)}")
    print(f"du = {format_polynomial(model.euler)}")
    print("betti:", " ".join(str(v) for v in numbers))
    for k, reps in generators.items():
        print(f"H^{k} = <{', '.join(reps)}>")
    return 0


def _cmd_massey(args) -> int:
    space = parse_space(args.space)
    euler = _resolve_euler(space, args.euler)
    model = build_model(space, euler)
    classes = []
    for text in args.classes:
        element = class_from_string(model, text)
        if not element.cocycle:
            raise ValueError(f"class {text!r} is not a cocycle in this model")
        classes.append(element)
    result = triple_massey(model, *classes)
    if args.json:
        if result is None:
            _emit_json({"defined": False, "trivial": None,
                        "representative": None, "indeterminacy_dim": None})
        else:
            _emit_json({"defined": True, "trivial": result.trivial,
                        "representative":
                            representative_string(model, result.representative),
                        "indeterminacy_dim": result.indeterminacy_dim})
        return 0
    if result is None:
        print("not defined (a product of consecutive inputs is not exact)")
        return 0
    print(f"degree: {result.degree}")
    print(f"representative: {representative_string(model, result.representative)}")
    print(f"indeterminacy dimension: {result.indeterminacy_dim}")
    print("trivial" if result.trivial else "non-trivial")
    return 0


def _cmd_classify(args) -> int:
    space = parse_space(args.space)
    euler = _resolve_euler(space, args.euler) if space.is_wolf_space else None
    verdict = classify(space, euler)
    witness_model = build_model(space, euler) if verdict.witness else None
    if args.json:
        _emit_json({
            "space": format_space(space),
            "euler": format_euler(euler, space) if euler else None,
            "formal": verdict.formal,
            "justification": verdict.justification,
            "witness": _witness_document(witness_model, verdict.witness),
        })
        return 0
    print(f"space: {format_space(space)}")
    if euler is not None:
        print(f"euler: {format_euler(euler, space)}")
    state = "formal" if verdict.formal else "non-formal"
    print(f"verdict: {state} ({verdict.justification})")
    if verdict.witness is not None:
        w = verdict.witness
        names = ", ".join(representative_string(witness_model, c)
                          for c in w.inputs)
        print(f"witness: <{names}> = "
              f"{representative_string(witness_model, w.representative)}, "
              f"indeterminacy dim {w.indeterminacy_dim}, non-trivial")
    return 0


def _parse_grid(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"grid must be lo..hi, got {text!r}")
    try:
        low, high = int(lo), int(hi)
    except ValueError as exc:
        raise ValueError(f"grid must be lo..hi with integers, got {text!r}") from exc
    if low > high:
        raise ValueError("empty grid range")
    return range(low, high + 1)


def _grid_specs(space: SpaceId, values: range) -> list[EulerClassSpec]:
    if space.family == GRASSMANN_REAL_R8:
        return [EulerClassSpec(a, b, c)
                for a in values for b in values for c in values]
    if space.family in EXCEPTIONAL:
        return [EulerClassSpec(a) for a in values]
    return [EulerClassSpec(a, b) for a in values for b in values]


def _cmd_table(args) -> int:
    space = parse_space(args.space)
    if not space.is_wolf_space:
        raise ValueError("table needs a Wolf-space base")
    grid = _grid_specs(space, _parse_grid(args.grid))
    report = cross_check(space, grid)
    rows = []
    for point in report.points:
        e = point.euler
        rows.append({
            "space": format_space(space),
            "a": str(e.a), "b": str(e.b), "c": str(e.c),
            "formal": point.formal,
            "justification": point.justification,
            "witness_trivial": point.witness_trivial,
        })
    failures = len(report.failures)
    if args.json:
        _emit_json({
            "space": format_space(space),
            "points": rows,
            "cross_check": {"points": len(report.points),
                            "failures": failures},
        })
    else:
        print("space,a,b,c,formal,justification,witness_trivial")
        for row in rows:
            trivial = "" if row["witness_trivial"] is None \
                else str(row["witness_trivial"]).lower()
            print(f"{row['space']},{row['a']},{row['b']},{row['c']},"
                  f"{str(row['formal']).lower()},{row['justification']},{trivial}")
    print(f"cross-check: {len(report.points)} points, {failures} failures",
          file=sys.stderr)
    return 3 if failures else 0


def _cmd_verify_paper(args) -> int:
    results = run_all()
    if args.json:
        _emit_json({
            "criteria": [{"key": r.key, "name": r.name,
                          "reference": r.reference, "passed": r.passed,
                          "detail": r.detail} for r in results],
            "passed": all(r.passed for r in results),
        })
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.key:>4}  {r.name:<24} {r.reference:<16} {r.detail}")
        good = sum(1 for r in results if r.passed)
        print(f"verify-paper: {good}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 3


_COMMANDS = {
    "cohomology": _cmd_cohomology,
    "model": _cmd_model,
    "massey": _cmd_massey,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "verify-paper": _cmd_verify_paper,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    merged = []
    i = 0
    while i < len(argv):  # let --grid -2..2 survive argparse tokenizing
        if argv[i] == "--grid" and i + 1 < len(argv):
            merged.append(f"--grid={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    args = _build_parser().parse_args(merged)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
