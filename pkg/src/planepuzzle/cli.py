"""Command line interface.

Exit codes: 0 when every requested check passes, 1 when a verification
check fails, 2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import permgrp
from .analysis import CHECK_NAMES, analyze, cycle_table, verify


def _parse_q_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"cannot parse q list {text!r}")


def _parse_checks(text: str):
    if text == "all":
        return CHECK_NAMES
    names = [part.strip() for part in text.split(",") if part.strip()]
    for name in names:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check name {name!r}")
    return names


def _print_check_lines(results) -> bool:
    ok = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        if res.degenerate:
            status += " (expected-degenerate)"
        print(f"  {res.name:<12} {status}  {res.detail}")
        if res.counterexample is not None:
            print(f"               counterexample: {res.counterexample}")
        ok = ok and res.passed
    return ok


def _cmd_analyze(args) -> int:
    report = analyze(args.q, alpha=args.alpha)
    print(f"q={report.q} alpha={report.alpha} degree={report.degree}")
    print(f"generators: {report.generators} (raw {report.raw_generators})")
    print(f"order: {report.order}")
    tag = report.tag + (f" [{report.note}]" if report.note else "")
    print(f"classification: {tag}")
    print(f"parity: {report.parity_counts} expected {report.parity_expected} "
          f"ok={report.parity_ok}")
    print(f"primitive: {report.primitive}")
    ok = _print_check_lines(report.checks)
    print("timings: " + ", ".join(f"{k}={v:.2f}s" for k, v in report.timings.items()))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.as_dict(), fh, indent=2)
        print(f"wrote {args.json}")
    return 0 if ok and report.parity_ok else 1


def _cmd_verify(args) -> int:
    results = verify(args.q, which=_parse_checks(args.checks), alpha=args.alpha)
    print(f"q={args.q}")
    return 0 if _print_check_lines(results) else 1


def _cmd_cycle_table(args) -> int:
    rows = cycle_table(_parse_q_list(args.q), alpha=args.alpha)
    print("q\tcycle_type")
    for q, ct in rows:
        print(f"{q}\t{permgrp.format_cycle_type(ct)}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(ui_dir=args.ui), host=args.host, port=args.port)
    return 0


def _cmd_report(args) -> int:
    from .report import write_report

    result = write_report(_parse_q_list(args.q), args.out_dir, alpha=args.alpha)
    for path in result["files"]:
        print(f"wrote {path}")
    ok = all(
        rep.parity_ok and all(c.passed for c in rep.checks)
        for rep in result["reports"]
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planepuzzle",
        description="Generalized fifteen-puzzle on PG(2,q): analysis and play",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="hole-group order, class, and checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--json", type=str, default=None, help="write the report as JSON")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--checks", type=str, default="all",
                   help="all or a comma list of " + ",".join(CHECK_NAMES))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cycle-table", help="collinear cycle types per q")
    p.add_argument("--q", type=str, required=True, help="comma list, e.g. 5,7,9")
    p.add_argument("--alpha", type=int, default=0)
    p.set_defaults(func=_cmd_cycle_table)

    p = sub.add_parser("serve", help="run the puzzle HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", type=str, default="127.0.0.1")
    p.add_argument("--ui", type=str, default=None,
                   help="directory with a built browser client to mount at /")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("report", help="write figures and delimited summaries")
    p.add_argument("--q", type=str, required=True, help="comma list, e.g. 3,5")
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--out-dir", type=str, required=True)
    p.set_defaults(func=_cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
