"""Command-line front end.

Verbs cover dimension tables, containment reports, witnesses, PBW degrees,
membership tests, generator sets, identity verification, quotient series,
structure checks, the conjecture sweep, and the degree-6 open elements.

Exit codes: 0 success, 1 usage or parse error, 2 a verification-style check
failed.  Reports are JSON (canonical: sorted keys, rationals in lowest
terms) or CSV for dimension tables; every report carries n, the cutoff,
the tool version, and wall-clock time.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .containment import (
    check_open_elements,
    conjecture_2k_sweep,
    containment_index,
    default_cutoff,
    pbw_witness,
)
from .exprs import ExprSyntaxError, parse_expr, poly_to_expr
from .freealg import IDENTITY_NAMES, verify_identity
from .lyndon import pbw_degree
from .quotients import (
    QuotientSpec,
    quotient_dim,
    r23_structure_dims,
    structure_basis_r22,
)
from .series import IdealSpec, SpanIdeal, dim_table, generators_S, m_span

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

HARD_DEGREE_CAP = 10
THREADS_ENV = "LCSIDEALS_THREADS"


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def emit(report: dict, args, fmt: str = "json", csv_text: str | None = None) -> None:
    text = csv_text if (fmt == "csv" and csv_text is not None) else canonical_json(report)
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
        meta = report.get("meta", {})
        print(
            f"{meta.get('command', args.verb)}: report written to {out_path} "
            f"({meta.get('wall_time_seconds', 0)}s)"
        )
    else:
        sys.stdout.write(text)


def wrap_report(args, result, n=None, cutoff=None, started=None) -> dict:
    return {
        "meta": {
            "tool": "lcsideals",
            "version": __version__,
            "command": args.verb,
            "n": n,
            "cutoff": cutoff,
            "wall_time_seconds": round(time.monotonic() - started, 6)
            if started is not None
            else None,
        },
        "result": result,
    }


def _check_degree_cap(degree: int, force: bool) -> None:
    if degree > HARD_DEGREE_CAP and not force:
        raise SystemExit(
            f"degree {degree} exceeds the safety cap {HARD_DEGREE_CAP}; "
            "pass --force to override"
        )


def cmd_dims(args) -> int:
    started = time.monotonic()
    _check_degree_cap(args.max_degree, args.force)
    specs = [IdealSpec.parse(s, args.n) for s in args.ideal]
    table = dim_table(specs, args.max_degree)
    report = wrap_report(
        args, table.to_json_obj(), n=args.n, cutoff=args.max_degree, started=started
    )
    emit(report, args, args.format, csv_text=table.to_csv())
    return EXIT_OK


def cmd_containment(args) -> int:
    started = time.monotonic()
    indices = _parse_tuple(args.tuple)
    cutoff = args.cutoff if args.cutoff is not None else default_cutoff(indices)
    _check_degree_cap(cutoff, args.force)
    workers = thread_count()
    if workers > 1:
        # per-degree target pieces are independent; warm the span caches in
        # a pool before the sequential report pass collects the results
        total, k = sum(indices), len(indices)
        cells = [
            (s, d)
            for d in range(total, cutoff + 1)
            for s in range(2, total - k + 3)
        ]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda sd: m_span(args.n, sd[0], sd[1]), cells))
    report_obj = containment_index(args.n, indices, cutoff)
    report = wrap_report(
        args, report_obj.to_json_obj(), n=args.n, cutoff=cutoff, started=started
    )
    emit(report, args, args.format)
    return EXIT_OK


def cmd_witness(args) -> int:
    started = time.monotonic()
    indices = _parse_tuple(args.tuple)
    w = pbw_witness(args.n, indices)
    degree = w.degree()
    _check_degree_cap(degree, args.force)
    target = sum(indices) - len(indices) + 2
    inside = m_span(args.n, target, degree).contains(w)
    result = {
        "witness_expr": poly_to_expr(w),
        "degree": degree,
        "pbw_factor_count": pbw_degree(w),
        "target_ideal": f"M{target}",
        "contained": inside,
    }
    report = wrap_report(args, result, n=args.n, cutoff=degree, started=started)
    emit(report, args, args.format)
    return EXIT_MISMATCH if inside else EXIT_OK


def cmd_pbw_degree(args) -> int:
    started = time.monotonic()
    p = parse_expr(args.expr, args.n)
    if p.is_zero():
        print("error: zero element has no PBW degree", file=sys.stderr)
        return EXIT_USAGE
    result = {"expr": poly_to_expr(p), "pbw_degree": pbw_degree(p)}
    report = wrap_report(args, result, n=args.n, started=started)
    emit(report, args, args.format)
    return EXIT_OK


def cmd_membership(args) -> int:
    started = time.monotonic()
    p = parse_expr(args.expr, args.n)
    spec = IdealSpec.parse(args.ideal, args.n)
    if spec.kind == "N":
        print("error: membership applies to L, M, or product ideals", file=sys.stderr)
        return EXIT_USAGE
    degree = args.degree if args.degree is not None else p.degree()
    _check_degree_cap(degree, args.force)
    component = p.homogeneous_component(degree)
    if component != p:
        print(
            f"note: testing the degree-{degree} homogeneous component",
            file=sys.stderr,
        )
    from .series import l_span, product_span

    if spec.kind == "L":
        space = l_span(args.n, spec.index, degree)
    elif spec.kind == "M":
        space = m_span(args.n, spec.index, degree)
    else:
        space = product_span(args.n, spec.factors, degree)
    member = space.contains(component)
    result = {
        "expr": poly_to_expr(component),
        "ideal": spec.label(),
        "degree": degree,
        "contained": member,
    }
    report = wrap_report(args, result, n=args.n, cutoff=degree, started=started)
    emit(report, args, args.format)
    return EXIT_OK


def cmd_generators(args) -> int:
    started = time.monotonic()
    _check_degree_cap(args.max_degree, args.force)
    gens = generators_S(args.index, args.max_degree)
    result: dict = {
        "index": args.index,
        "max_degree": args.max_degree,
        "count": len(gens),
        "generators": [poly_to_expr(g) for g in gens],
    }
    status = EXIT_OK
    if args.verify:
        ideal = SpanIdeal(2, gens, two_sided=True)
        rows = []
        ok = True
        for d in range(args.max_degree + 1):
            want = m_span(2, args.index, d).dim
            got = ideal.span(d).dim
            equal = want == got and ideal.span(d).is_subspace_of(
                m_span(2, args.index, d)
            )
            ok = ok and equal
            rows.append({"degree": d, "span_dim": got, "ideal_dim": want, "equal": equal})
        result["verification"] = rows
        if not ok:
            status = EXIT_MISMATCH
    report = wrap_report(args, result, n=2, cutoff=args.max_degree, started=started)
    emit(report, args, args.format)
    return status


def cmd_verify_identities(args) -> int:
    started = time.monotonic()
    rows = []
    ok = True
    for name in IDENTITY_NAMES:
        holds = verify_identity(name, args.n)
        ok = ok and holds
        rows.append({"identity": name, "holds": holds})
    report = wrap_report(args, rows, n=args.n, started=started)
    emit(report, args, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_quotient_dims(args) -> int:
    started = time.monotonic()
    _check_degree_cap(args.max_degree, args.force)
    i, j = _parse_tuple(args.mod, expected=2)
    spec = QuotientSpec(args.n, i, j)
    rows = [
        {
            "series": args.series,
            "r": args.r,
            "degree": d,
            "dim": quotient_dim(spec, args.series, args.r, d),
        }
        for d in range(args.max_degree + 1)
    ]
    result = {"quotient": spec.label(), "rows": rows}
    report = wrap_report(args, result, n=args.n, cutoff=args.max_degree, started=started)
    emit(report, args, args.format)
    return EXIT_OK


def cmd_structure_check(args) -> int:
    started = time.monotonic()
    _check_degree_cap(args.max_degree, args.force)
    ok = True
    if args.which == "r22":
        spec = QuotientSpec(args.n, 2, 2)
        rows = []
        for r in range(2, args.r_max + 1):
            for d in range(args.max_degree + 1):
                predicted = structure_basis_r22(args.n, r, d)
                computed = quotient_dim(spec, "N", r, d)
                equal = predicted == computed
                ok = ok and equal
                rows.append(
                    {
                        "r": r,
                        "degree": d,
                        "basis_count": predicted,
                        "computed_dim": computed,
                        "equal": equal,
                    }
                )
        result = {"quotient": spec.label(), "rows": rows}
    else:
        spec = QuotientSpec(2, 2, 3)
        predicted = r23_structure_dims(args.r, args.max_degree)
        rows = []
        for d in range(args.max_degree + 1):
            computed = quotient_dim(spec, "N", args.r, d)
            equal = predicted[d] == computed
            ok = ok and equal
            rows.append(
                {
                    "r": args.r,
                    "degree": d,
                    "formula_dim": predicted[d],
                    "computed_dim": computed,
                    "equal": equal,
                }
            )
        result = {"quotient": spec.label(), "rows": rows}
    report = wrap_report(args, result, n=args.n, cutoff=args.max_degree, started=started)
    emit(report, args, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_conjecture_sweep(args) -> int:
    started = time.monotonic()
    cap = 2 * args.k_max + 2
    _check_degree_cap(cap, args.force)
    if args.n_max >= 4 and args.k_max >= 2 and not args.force:
        raise SystemExit(
            "n_max >= 4 with k_max >= 2 is expensive; pass --force to proceed"
        )
    rows = conjecture_2k_sweep(args.n_max, args.k_max, args.cutoff)
    report = wrap_report(args, rows, n=args.n_max, cutoff=args.cutoff, started=started)
    emit(report, args, args.format)
    return EXIT_OK


def cmd_open_elements(args) -> int:
    started = time.monotonic()
    rows = check_open_elements(args.cutoff)
    report = wrap_report(args, rows, n=3, cutoff=args.cutoff, started=started)
    emit(report, args, args.format)
    all_in = all(r["contained"] for r in rows)
    return EXIT_OK if all_in else EXIT_MISMATCH


def _parse_tuple(text: str, expected: int | None = None) -> tuple[int, ...]:
    try:
        t = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(f"cannot parse index tuple {text!r}")
    if expected is not None and len(t) != expected:
        raise SystemExit(f"expected {expected} comma-separated indices, got {text!r}")
    return t


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcsideals",
        description="Exact lower central series ideal computations over the rationals",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report to this path")
        p.add_argument("--force", action="store_true", help="override safety caps")

    p = sub.add_parser("dims", help="dimension table for graded ideal pieces")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--ideal",
        action="append",
        required=True,
        help="ideal spec like L2, M3, N2, or P2,2 (repeatable)",
    )
    p.add_argument("--max-degree", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("containment", help="containment index report for a tuple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True, help="comma-separated indices, each >= 2")
    p.add_argument("--cutoff", type=int)
    common(p)
    p.set_defaults(func=cmd_containment)

    p = sub.add_parser("witness", help="non-containment witness for a tuple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tuple", required=True)
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("pbw-degree", help="PBW filtration degree of an expression")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    common(p)
    p.set_defaults(func=cmd_pbw_degree)

    p = sub.add_parser("membership", help="graded ideal membership of an expression")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--ideal", required=True, help="L<k>, M<k>, or P<i1,i2,...>")
    p.add_argument("--degree", type=int)
    common(p)
    p.set_defaults(func=cmd_membership)

    p = sub.add_parser("generators", help="generator set of an M-ideal on A_2")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="compare spans degreewise")
    common(p)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("verify-identities", help="check the built-in identities")
    p.add_argument("--n", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("quotient-dims", help="series dimensions inside R_{i,j}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", required=True, help="the two product indices, e.g. 2,3")
    p.add_argument("--series", choices=("L", "M", "N", "B"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_quotient_dims)

    p = sub.add_parser("structure-check", help="structure formulas vs computed dims")
    p.add_argument("--which", choices=("r22", "r23"), required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--r", type=int, default=5, help="layer for r23")
    p.add_argument("--r-max", type=int, default=5, help="largest layer for r22")
    p.add_argument("--max-degree", type=int, default=7)
    common(p)
    p.set_defaults(func=cmd_structure_check)

    p = sub.add_parser("conjecture-sweep", help="observed vs conjectured (2,...,2)")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--cutoff", type=int)
    common(p)
    p.set_defaults(func=cmd_conjecture_sweep)

    p = sub.add_parser("open-elements", help="degree-6 membership checks in M_5(A_3)")
    p.add_argument("--cutoff", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_open_elements)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ExprSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"error: {exc.code}", file=sys.stderr)
            return EXIT_USAGE
        return exc.code if exc.code is not None else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
