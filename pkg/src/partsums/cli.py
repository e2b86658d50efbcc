"""Command-line entry point: ``partsums verify|scan|partitions|series-check``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .exact import rational_str
from .identities import (
    ALL_IDS,
    CONJECTURE_IDS,
    RangeError,
    ScanReport,
    VerificationResult,
    default_workers,
    scan,
)
from .partitions import conjugate, enumerate_partitions, ferrers
from .series import run_all_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FIELDS = ("id", "n", "k", "lhs", "rhs", "relation", "verdict", "terms")


def record(r: VerificationResult) -> dict:
    rec = {
        "id": r.id,
        "n": r.n,
        "lhs": rational_str(r.lhs),
        "rhs": rational_str(r.rhs),
        "relation": r.relation,
        "verdict": r.verdict.value,
        "terms": r.term_count,
    }
    if r.k is not None:
        rec["k"] = r.k
    return rec


def render_json(report: ScanReport) -> str:
    run = {"ids": report.ids, "n_min": report.n_min, "n_max": report.n_max}
    if report.notices:
        run["notices"] = report.notices
    doc = {
        "run": run,
        "results": [record(r) for r in report.results],
        "summary": report.summary,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_csv(report: ScanReport) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in report.results:
        writer.writerow(record(r))
    return buf.getvalue()


def render_table(report: ScanReport) -> str:
    rows = [[str(record(r).get(f, "")) for f in FIELDS] for r in report.results]
    widths = [max([len(f), *(len(row[i]) for row in rows)]) for i, f in enumerate(FIELDS)]
    lines = [f"note: {msg}" for msg in report.notices]
    lines.append("  ".join(f.ljust(w) for f, w in zip(FIELDS, widths)).rstrip())
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    for identity, counts in report.per_id_summary().items():
        lines.append(f"{identity}: pass={counts['pass']} fail={counts['fail']} boundary={counts['boundary']}")
    s = report.summary
    lines.append(f"summary: pass={s['pass']} fail={s['fail']} boundary={s['boundary']}")
    return "\n".join(lines) + "\n"


RENDERERS = {"table": render_table, "csv": render_csv, "json": render_json}


def _emit(report: ScanReport, fmt: str) -> int:
    sys.stdout.write(RENDERERS[fmt](report))
    return EXIT_OK if report.all_pass else EXIT_FAIL


def _resolve_ids(raw: Optional[Sequence[str]]) -> list[str]:
    if not raw or "all" in raw:
        return list(ALL_IDS)
    unknown = [i for i in raw if i not in ALL_IDS]
    if unknown:
        raise KeyError(f"unknown id(s): {', '.join(unknown)}; valid ids: all, {', '.join(ALL_IDS)}")
    return list(raw)


def cmd_verify(args: argparse.Namespace) -> int:
    ids = _resolve_ids(args.id)
    report = scan(ids, args.n_min, args.n_max, workers=args.workers, clip=True)
    return _emit(report, args.format)


def cmd_scan(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise RangeError("scan needs --n-max >= 2")
    report = scan(CONJECTURE_IDS, 2, args.n_max, workers=args.workers)
    return _emit(report, args.format)


def _plus(p: Sequence[int]) -> str:
    return "+".join(map(str, p)) if p else "(empty partition)"


def cmd_partitions(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise RangeError("--n must be nonnegative")
    out = []
    for p in enumerate_partitions(args.n):
        line = _plus(p)
        if args.conjugate:
            line += f"  conjugate: {_plus(conjugate(p))}"
        out.append(line + "\n")
        if args.ferrers and p:
            out.append(ferrers(p) + "\n")
    sys.stdout.write("".join(out))
    return EXIT_OK


def cmd_series_check(args: argparse.Namespace) -> int:
    if args.order < 1:
        raise RangeError("--order must be at least 1")
    ok = True
    for check in run_all_checks(args.order):
        status = "PASS" if check.ok else "FAIL"
        head = ", ".join(rational_str(c) for c in check.coefficients[:6])
        print(f"{check.name}: {status} (order {args.order}; leading coefficients {head}, ...)")
        if not check.ok:
            ok = False
            i = check.first_mismatch
            got = rational_str(check.coefficients[i]) if i < len(check.coefficients) else "missing"
            want = rational_str(check.expected[i]) if i < len(check.expected) else "missing"
            print(f"  first mismatch at index {i}: got {got}, expected {want}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partsums", description="Exact verification of partition-sum identities for powers of two.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--workers", type=int, default=default_workers(), help="process pool size (default: CPU count)")
        p.add_argument("--format", choices=sorted(RENDERERS), default="table")

    v = sub.add_parser("verify", help="verify identities over a range of n")
    v.add_argument("--id", action="append", help="identity id, repeatable; 'all' for every id (default)")
    v.add_argument("--n-min", type=int, default=None, help="default: smallest n each id is stated for")
    v.add_argument("--n-max", type=int, required=True)
    add_run_flags(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="scan the conjectures for n = 2..n-max")
    s.add_argument("--n-max", type=int, required=True)
    add_run_flags(s)
    s.set_defaults(func=cmd_scan)

    pt = sub.add_parser("partitions", help="list the partitions of n")
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--ferrers", action="store_true", help="draw each Ferrers diagram")
    pt.add_argument("--conjugate", action="store_true", help="show each conjugate partition")
    pt.set_defaults(func=cmd_partitions)

    sc = sub.add_parser("series-check", help="run the generating-function oracle checks")
    sc.add_argument("--order", type=int, required=True)
    sc.set_defaults(func=cmd_series_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except (KeyError, RangeError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"partsums: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
