"""Command-line front end.

Subcommands: mutate, weight, period, laurent, seq, decompose, scan,
catalog.  Exit status 0 on success, 1 on a domain error (the structured
error name is printed to stderr), 2 on a usage error.  Numeric output is
always decimal strings so big integers stay bit-exact; sequence-style
commands emit JSON lines by default with CSV and text mirrors.  The
QUIVERSEQ_BUDGET environment variable overrides the symbolic term
budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import laurent as laurent_mod
from . import periodicity, seqgen
from .dualnum import format_scalar
from .errors import QuiverSeqError
from .quiver import Quiver, WeightedQuiver, load_quiver


def _read_quiver(path: str) -> Quiver | WeightedQuiver:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise QuiverSeqError(f"cannot read {path}: {exc}") from exc
    return load_quiver(text)


def _weighted(args) -> WeightedQuiver:
    """Weighted quiver from file "w", --weights, or the solved weight function."""
    loaded = _read_quiver(args.quiver)
    if isinstance(loaded, WeightedQuiver):
        if getattr(args, "weights", None):
            return WeightedQuiver(loaded.quiver, _parse_ints(args.weights))
        return loaded
    if getattr(args, "weights", None):
        return WeightedQuiver(loaded, _parse_ints(args.weights))
    solution = periodicity.solve_weight(loaded)
    if solution is None:
        raise QuiverSeqError(
            "quiver has no period-1 weight function; pass --weights explicitly"
        )
    return WeightedQuiver(loaded, solution.weights)


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise QuiverSeqError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_range(text: str) -> list[int]:
    """Accept "3", "1..5", or "0,2,5"."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",")]


def _parse_deform(text: str) -> tuple[str, tuple[int, ...]] | None:
    if text == "none":
        return None
    if ":" not in text:
        raise QuiverSeqError(f'deform must look like "m2:1" or "m1:1,1,-1,-1", got {text!r}')
    placement, _, pattern = text.partition(":")
    if placement not in ("m1", "m2"):
        raise QuiverSeqError(f"deform placement must be m1 or m2, got {placement!r}")
    return placement, _parse_ints(pattern)


def _jline(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _emit_run(run: seqgen.SequenceRun, fmt: str, out) -> None:
    rows = [
        {
            "index": i,
            "paper_index": run.paper_index(i),
            "body": format_scalar(t.body),
            "slope": format_scalar(t.slope),
            "integral": run.integral[i],
        }
        for i, t in enumerate(run.terms)
    ]
    if fmt == "json":
        for row in rows:
            print(_jline(row), file=out)
    elif fmt == "csv":
        print("index,paper_index,body,slope,integral", file=out)
        for r in rows:
            print(
                f"{r['index']},{r['paper_index']},{r['body']},{r['slope']},{str(r['integral']).lower()}",
                file=out,
            )
    else:
        for r in rows:
            mark = "" if r["integral"] else "   <- not integral"
            print(
                f"n={r['index']} (paper {r['paper_index']}): body={r['body']} slope={r['slope']}{mark}",
                file=out,
            )
        if run.degenerate_steps:
            print(f"degenerate at steps: {run.degenerate_steps}", file=out)


def _cmd_mutate(args, out) -> int:
    loaded = _read_quiver(args.quiver)
    mutated = loaded.mutate(args.at)
    result_q = mutated.quiver if isinstance(mutated, WeightedQuiver) else mutated
    unchanged = result_q.rotate() == result_q
    payload = mutated.to_dict()
    payload["unchanged_by_rotation"] = unchanged
    if args.format == "text":
        for row in payload["b"]:
            print(" ".join(f"{e:3d}" for e in row), file=out)
        if "w" in payload:
            print("w = " + ",".join(map(str, payload["w"])), file=out)
        print(f"unchanged by rotation: {str(unchanged).lower()}", file=out)
    else:
        print(_jline(payload), file=out)
    return 0


def _cmd_weight(args, out) -> int:
    loaded = _read_quiver(args.quiver)
    q = loaded.quiver if isinstance(loaded, WeightedQuiver) else loaded
    exists = periodicity.weight_exists(q)
    residual = periodicity.closing_residual(q)
    solution = periodicity.solve_weight(q)
    weights = list(solution.weights) if solution else None
    if args.format == "json":
        print(_jline({"exists": exists, "weights": weights, "closing_residual": residual}), file=out)
    else:
        print(f"exists: {str(exists).lower()}", file=out)
        if weights is not None:
            print("w = (" + ", ".join(map(str, weights)) + ")", file=out)
        print(f"closing residual: {residual}", file=out)
    return 0


def _cmd_period(args, out) -> int:
    wq = _weighted(args)
    period = periodicity.weight_period(wq, args.max)
    if args.format == "json":
        print(_jline({"period": period, "max_cycles": args.max}), file=out)
    else:
        if period is None:
            print(f"period: none found within {args.max} cycles", file=out)
        else:
            print(f"period: {period}", file=out)
    return 0


def _cmd_laurent(args, out) -> int:
    wq = _weighted(args)
    budget = laurent_mod.DEFAULT_TERM_BUDGET
    env = os.environ.get("QUIVERSEQ_BUDGET")
    if env:
        budget = int(env)
    if args.budget is not None:
        budget = args.budget
    reports = laurent_mod.verify_laurent_run(
        wq, args.steps, budget, evolve_weights=not args.hold_weights
    )
    names = laurent_mod.var_names(wq.n)
    for rep in reports:
        denom = rep.denominator.format(names)
        if args.format == "json":
            row = {
                "step": rep.step,
                "laurent": rep.is_laurent,
                "denominator": denom,
                "body_terms": rep.body_terms,
                "slope_terms": rep.slope_terms,
            }
            if args.emit == "sexpr":
                row["sexpr"] = _report_sexpr(rep, names)
            print(_jline(row), file=out)
        else:
            status = "laurent" if rep.is_laurent else "NOT laurent"
            print(
                f"step {rep.step}: {status}  denominator={denom}  "
                f"terms={rep.body_terms}+{rep.slope_terms}",
                file=out,
            )
            if args.emit == "sexpr":
                print(_report_sexpr(rep, names), file=out)
    if args.check and not all(rep.is_laurent for rep in reports):
        return 1
    return 0


def _report_sexpr(rep: laurent_mod.StepReport, names) -> str:
    v = rep.variable
    if isinstance(v, laurent_mod.DualLaurent):
        return v.sexpr()
    return (
        f"(fraction (body-num {v.num_body.sexpr(names)}) "
        f"(slope-num {v.num_slope.sexpr(names)}) (den {v.den.sexpr(names)}))"
    )


def _family_spec(args) -> seqgen.RecurrenceSpec:
    if getattr(args, "quiver", None):
        wq = _weighted(args)
        spec = seqgen.quiver_to_spec(wq)
    else:
        params = {}
        for key in ("N", "r", "s", "p", "q"):
            value = getattr(args, key, None)
            if value is not None:
                values = _parse_range(value)
                if len(values) != 1:
                    raise QuiverSeqError(f"--{key} must be a single value here, got {value!r}")
                params[key] = values[0]
        spec = seqgen.builtin(args.family, **params)
    if getattr(args, "deform", None):
        deform = _parse_deform(args.deform)
        if deform is None:
            spec = spec.without_deform()
        else:
            spec = spec.with_deform(*deform)
    return spec


def _cmd_seq(args, out) -> int:
    spec = _family_spec(args)
    init_a = _parse_ints(args.init_a) if args.init_a else None
    init_b = _parse_ints(args.init_b) if args.init_b else None
    result = seqgen.run(spec, init_a=init_a, init_b=init_b, count=args.terms)
    _emit_run(result, args.format, out)
    return 0


def _cmd_decompose(args, out) -> int:
    spec = _family_spec(args)
    base = seqgen.run(spec, count=args.terms)
    rows = seqgen.decompose_basis(spec, base)
    if args.format == "csv":
        print("basis,index,paper_index,value", file=out)
        for i, row in enumerate(rows, start=1):
            for j, value in enumerate(row):
                print(f"{i},{j},{spec.index_origin + j},{format_scalar(value)}", file=out)
    elif args.format == "text":
        for i, row in enumerate(rows, start=1):
            print(f"b^{i}: " + ", ".join(format_scalar(v) for v in row), file=out)
    else:
        for i, row in enumerate(rows, start=1):
            print(
                _jline({"basis": i, "values": [format_scalar(v) for v in row]}),
                file=out,
            )
    return 0


def _cmd_scan(args, out) -> int:
    grid = {}
    for key in ("N", "r", "s", "p", "q"):
        value = getattr(args, key, None)
        if value is not None:
            grid[key] = _parse_range(value)
    if not grid:
        raise QuiverSeqError("scan needs at least one parameter range (e.g. --q 0..5)")
    deform = _parse_deform(args.deform) if args.deform else None
    cells = seqgen.integrality_scan(args.family, grid, args.horizon, deform)
    for cell in cells:
        ff = cell.run.first_fraction
        row = {
            "params": cell.params,
            "clean": cell.clean,
            "degenerate": bool(cell.run.degenerate_steps),
            "first_fraction_index": None if ff is None else ff[0],
            "first_fraction_paper_index": None if ff is None else cell.run.paper_index(ff[0]),
            "first_fraction_value": None if ff is None else format_scalar(ff[1]),
        }
        if args.format == "text":
            params = " ".join(f"{k}={v}" for k, v in row["params"].items())
            if ff is None:
                status = "degenerate" if row["degenerate"] else f"integral to horizon {args.horizon}"
            else:
                status = f"first fraction {row['first_fraction_value']} at n={row['first_fraction_paper_index']}"
            print(f"{params}: {status}", file=out)
        elif args.format == "csv":
            if cells.index(cell) == 0:
                print("params,clean,degenerate,first_fraction_index,first_fraction_paper_index,first_fraction_value", file=out)
            params = ";".join(f"{k}={v}" for k, v in row["params"].items())
            blank_if_none = lambda v: "" if v is None else v
            print(
                f"{params},{str(row['clean']).lower()},{str(row['degenerate']).lower()},"
                f"{blank_if_none(row['first_fraction_index'])},"
                f"{blank_if_none(row['first_fraction_paper_index'])},"
                f"{blank_if_none(row['first_fraction_value'])}",
                file=out,
            )
        else:
            print(_jline(row), file=out)
    return 0


def _cmd_catalog(args, out) -> int:
    for name in seqgen.family_names():
        if name == "gale_robinson":
            spec = seqgen.builtin(name, N=6, r=1, s=2)
            shown = "gale_robinson(N,r,s)   e.g. " + spec.formula()
        elif name == "fordy_marsh_s4":
            spec = seqgen.builtin(name, p=2, q=3)
            shown = "fordy_marsh_s4(p,q)    e.g. " + spec.formula()
        else:
            spec = seqgen.builtin(name)
            shown = spec.formula()
        if args.format == "json":
            print(
                _jline(
                    {
                        "name": name,
                        "order": spec.order,
                        "index_origin": spec.index_origin,
                        "formula": spec.formula(),
                        "init_a": list(spec.init_a),
                    }
                ),
                file=out,
            )
        else:
            print(f"{name}: {shown}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverseq",
        description="Exact quiver mutation, dual-number recurrences, and Laurent checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a quiver at a vertex")
    p.add_argument("--quiver", required=True, help="path to quiver JSON")
    p.add_argument("--at", type=int, required=True, help="vertex to mutate (1-indexed)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("weight", help="period-1 weight function existence and values")
    p.add_argument("--quiver", required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_weight)

    p = sub.add_parser("period", help="weight period under mutate-then-rotate cycles")
    p.add_argument("--quiver", required=True)
    p.add_argument("--weights", help="comma-separated weights (overrides file/solved)")
    p.add_argument("--max", type=int, default=64)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("laurent", help="symbolic Laurent verification run")
    p.add_argument("--quiver", required=True)
    p.add_argument("--weights", help="comma-separated weights (overrides file/solved)")
    p.add_argument("--steps", type=int, default=6)
    p.add_argument("--check", action="store_true", help="exit 1 if any step is non-Laurent")
    p.add_argument(
        "--hold-weights",
        action="store_true",
        help="force the weight vector unchanged each cycle instead of mutating it",
    )
    p.add_argument("--emit", choices=("sexpr",), help="also dump expressions")
    p.add_argument("--budget", type=int, help="term budget (default 10^6 or QUIVERSEQ_BUDGET)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_laurent)

    def add_family_args(p):
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--family", help="built-in family name (see catalog)")
        source.add_argument("--quiver", help="compile the recurrence from a weighted quiver")
        for key in ("N", "r", "s", "p", "q"):
            p.add_argument(f"--{key}", help=f"family parameter {key} (single value)")

    p = sub.add_parser("seq", help="run a dual recurrence")
    add_family_args(p)
    p.add_argument("--weights", help="weights when --quiver lacks them")
    p.add_argument("--terms", type=int, default=20, help="total terms including initials")
    p.add_argument("--init-a", dest="init_a", help="override initial bodies")
    p.add_argument("--init-b", dest="init_b", help="initial slopes (default all zero)")
    p.add_argument("--deform", help='deformation, e.g. "m2:1", "m1:1,1,-1,-1", or "none"')
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("decompose", help="slope basis rows of an undeformed family")
    add_family_args(p)
    p.add_argument("--weights")
    p.add_argument("--terms", type=int, default=15)
    p.add_argument("--deform", help='usually "none" (default for decompose)')
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("scan", help="integrality scan over a parameter grid")
    p.add_argument("--family", required=True)
    for key in ("N", "r", "s", "p", "q"):
        p.add_argument(f"--{key}", help=f"family parameter {key} (range like 1..3)")
    p.add_argument("--deform", help='deformation applied to every cell, e.g. "m1:1"')
    p.add_argument("--horizon", type=int, default=30, help="total terms per cell")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("catalog", help="list built-in recurrence families")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except QuiverSeqError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
