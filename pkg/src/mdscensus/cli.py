"""Command-line frontend: field inspection, matrix property checks,
census campaigns, claim verification and count-table rendering.

Exit codes: 0 all requested properties/claims hold, 1 a property or
claim failed (a witness is reported), 2 usage or input error, 3
enumeration budget exceeded.  All computation happens in the library;
output is written once, after aggregation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    BudgetExceededError,
    CENSUS_CLASSES,
    CensusResult,
    emit_tables,
    run_census,
)
from .field import make_field
from .matrix import matrix_from_json
from .predicates import PredicateReport, is_involutory, is_mds, is_nmds, is_orthogonal
from .matrix import det as matrix_det
from .theorems import CLAIMS, run_claim

PROPERTIES = ("mds", "nmds", "involutory", "orthogonal", "nonsingular")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int, default=3, help="extension degree of GF(2^r) (default 3)")
    p.add_argument("--poly", type=lambda s: int(s, 0), default=None,
                   help="reduction polynomial, hex with bit r set (e.g. 0x13)")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker count; 0 = auto, default from MDSCENSUS_JOBS or 1")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled scans")
    p.add_argument("--format", choices=("text", "json", "csv", "markdown"), default="text")
    p.add_argument("--allow-long", action="store_true", help="admit long-running enumerations")
    p.add_argument("--strict", action="store_true", help="nonzero exit when table cells are skipped")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mdscensus",
                                 description="Finite-field matrix property checks and censuses")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print a field summary")
    _add_common(p)

    p = sub.add_parser("check", help="check properties of a matrix file")
    p.add_argument("file", help="matrix JSON file (explicit rows or structured shorthand)")
    p.add_argument("props", nargs="+", choices=PROPERTIES, help="properties to check")
    _add_common(p)

    p = sub.add_parser("census", help="run an enumeration campaign")
    p.add_argument("class_id", metavar="class", help=f"one of {', '.join(CENSUS_CLASSES)}")
    p.add_argument("--method", choices=("brute", "formula", "both"), default="brute")
    _add_common(p)

    p = sub.add_parser("verify", help="verify a structural claim")
    p.add_argument("claim", help=f"'all' or one of {', '.join(CLAIMS)}")
    _add_common(p)

    p = sub.add_parser("tables", help="render the 4x4 MDS count tables")
    p.add_argument("--table", type=int, choices=(1, 2), required=True)
    p.add_argument("--r-min", type=int, default=3)
    p.add_argument("--r-max", type=int, default=8)
    _add_common(p)

    return ap


def _census_text(res: CensusResult) -> str:
    line = (f"{res.class_id} r={res.r} poly=0x{res.poly:X} method={res.method} "
            f"count={res.count} partitions={res.partitions} elapsed_ms={res.elapsed_ms:.1f}")
    if res.extra:
        line += " " + " ".join(f"{k}={v}" for k, v in sorted(res.extra.items()))
    return line


def _emit_census(results: list[CensusResult], fmt: str, out: list[str]) -> None:
    if fmt == "json":
        out.append(json.dumps([r.to_json() for r in results], indent=2, sort_keys=True))
    elif fmt == "csv":
        out.append("class_id,r,poly,method,count,partitions")
        for r in results:
            out.append(f"{r.class_id},{r.r},0x{r.poly:X},{r.method},{r.count},{r.partitions}")
    else:
        for r in results:
            out.append(_census_text(r))


def cmd_field(args) -> int:
    field = make_field(args.r, args.poly)
    info = {
        "r": field.r,
        "poly": f"0x{field.poly:X}",
        "generator": f"0x{field.generator:X}",
        "group_order": field.order - 1,
    }
    if args.format == "json":
        print(json.dumps(info, indent=2, sort_keys=True))
    else:
        print(f"GF(2^{field.r}) poly=0x{field.poly:X} generator=0x{field.generator:X} "
              f"multiplicative group order {field.order - 1}")
    return EXIT_OK


def cmd_check(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if args.poly is not None or "r" not in obj:
        field = make_field(args.r, args.poly)
        m = matrix_from_json(obj, field)
    else:
        m = matrix_from_json(obj)
    reports: list[PredicateReport] = []
    for prop in args.props:
        if prop == "mds":
            reports.append(is_mds(m))
        elif prop == "nmds":
            reports.append(is_nmds(m))
        elif prop == "involutory":
            reports.append(PredicateReport("involutory", is_involutory(m)))
        elif prop == "orthogonal":
            reports.append(PredicateReport("orthogonal", is_orthogonal(m)))
        elif prop == "nonsingular":
            reports.append(PredicateReport("nonsingular", matrix_det(m) != 0))
    if args.format == "json":
        print(json.dumps([rep.to_json() for rep in reports], indent=2, sort_keys=True))
    else:
        for rep in reports:
            if rep.holds:
                print(f"{rep.property}: holds")
            elif rep.witness is not None:
                print(f"{rep.property}: FAILS witness rows={list(rep.witness.rows)} "
                      f"cols={list(rep.witness.cols)}")
            else:
                print(f"{rep.property}: FAILS")
    return EXIT_OK if all(rep.holds for rep in reports) else EXIT_FAILED


def cmd_census(args) -> int:
    if args.class_id not in CENSUS_CLASSES:
        print(f"unknown census class {args.class_id!r}", file=sys.stderr)
        return EXIT_USAGE
    field = make_field(args.r, args.poly)
    out: list[str] = []
    if args.method == "both":
        brute = run_census(args.class_id, field, "brute", jobs=args.jobs,
                           allow_long=args.allow_long)
        formula = run_census(args.class_id, field, "formula", jobs=args.jobs,
                             allow_long=args.allow_long)
        results = [brute, formula]
        _emit_census(results, args.format, out)
        agree = brute.count == formula.count
        if args.format != "json":
            out.append(f"agreement: {'ok' if agree else 'MISMATCH'}")
        print("\n".join(out))
        return EXIT_OK if agree else EXIT_FAILED
    res = run_census(args.class_id, field, args.method, jobs=args.jobs,
                     allow_long=args.allow_long)
    _emit_census([res], args.format, out)
    print("\n".join(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    field = make_field(args.r, args.poly)
    claims = CLAIMS if args.claim == "all" else (args.claim,)
    for claim in claims:
        if claim not in CLAIMS:
            print(f"unknown claim {claim!r}", file=sys.stderr)
            return EXIT_USAGE
    reports = []
    for claim in claims:
        reports.extend(
            run_claim(claim, field, seed=args.seed, jobs=args.jobs, allow_long=args.allow_long)
        )
    if args.format == "json":
        print(json.dumps([rep.to_json() for rep in reports], indent=2, sort_keys=True))
    else:
        for rep in reports:
            status = "ok" if rep.ok else f"FAILED ({len(rep.counterexamples)} counterexamples)"
            print(f"{rep.claim} [{rep.mode}] scanned={rep.scanned}: {status}")
    return EXIT_OK if all(rep.ok for rep in reports) else EXIT_FAILED


def cmd_tables(args) -> int:
    fmt = {"markdown": "markdown", "md": "markdown"}.get(args.format, args.format)
    doc = emit_tables(args.table, args.r_min, args.r_max, fmt=fmt, jobs=args.jobs,
                      allow_long=args.allow_long)
    print(doc.text)
    if doc.any_skipped and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors already
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {
        "field": cmd_field,
        "check": cmd_check,
        "census": cmd_census,
        "verify": cmd_verify,
        "tables": cmd_tables,
    }
    try:
        return handlers[args.command](args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
