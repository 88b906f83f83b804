"""Command-line front end: count, enumerate, construct, verify, search, check.

Thin sequential shell over the library.  Exit codes: 0 on success/verified/
found, 1 on verification failure or a proven NONE where a target asserts
existence, 2 on usage errors.  `--json` switches machine-readable output on;
PERFPART_WORKERS sets the verifier worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from .construct_group import knn_partition, l2nn_partition
from .construct_l61 import build_l61
from .construct_l82 import build_l82, classify_parts
from .counting import necessary_condition
from .graph_model import GraphSpec, degree, from_matrix, l_graph
from .matchings import enumerate_matchings, label_l61, label_l82
from .perm_core import parse_cycles, to_cycles
from .search import SearchBudgetExceeded, find_perfect_partition
from .tables import canonical_parts, diff_parts, l61_golden_parts
from .verifier import (
    check_extendability,
    check_partition,
    load_certificate,
    make_certificate,
    save_certificate,
)

SEARCH_TARGETS = {"l41": (1, 4), "l51": (1, 5), "l62": (2, 3)}


def _workers() -> int:
    raw = os.environ.get("PERFPART_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _add_graph_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--r", type=int, help="hole size r of L(r, m); 0 for K_{n,n}")
    sub.add_argument("--m", type=int, help="number of holes m of L(r, m)")
    sub.add_argument("--n", type=int, help="side size; required when r = 0")
    sub.add_argument("--matrix", metavar="FILE", help="0/1 adjacency rows, one per line")


def _graph_from_flags(parser: argparse.ArgumentParser, args) -> GraphSpec:
    if args.matrix is not None:
        if args.r is not None or args.m is not None or args.n is not None:
            parser.error("--matrix excludes --r/--m/--n")
        try:
            with open(args.matrix, encoding="ascii") as fh:
                rows = [line.strip() for line in fh if line.strip()]
            return from_matrix(rows)
        except (OSError, ValueError) as exc:
            parser.error(f"bad matrix file {args.matrix}: {exc}")
    if args.r is None:
        parser.error("need --r (with --m or --n) or --matrix FILE")
    try:
        return l_graph(args.r, args.m, args.n)
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def _cmd_count(parser, args) -> int:
    spec = _graph_from_flags(parser, args)
    report = necessary_condition(spec, oracle=args.oracle or spec.kind == "matrix")
    payload = asdict(report)
    payload["count"] = report.count
    if not args.json:
        print(
            f"n={report.n} matchings={report.count} degree={report.degree} "
            f"divisible={'yes' if report.divisible else 'no'}"
        )
    print(json.dumps(payload, sort_keys=True))
    return 0


def _classifier(spec: GraphSpec, parser):
    if spec.kind == "L" and (spec.r, spec.m) == (1, 6):
        return label_l61
    if spec.kind == "L" and (spec.r, spec.m) == (2, 4):
        return label_l82
    parser.error("--classify is defined for L(1, 6) and L(2, 4) only")
    raise AssertionError("unreachable")


def _cmd_enumerate(parser, args) -> int:
    spec = _graph_from_flags(parser, args)
    label = _classifier(spec, parser) if args.classify else None
    records = []
    for p in enumerate_matchings(spec):
        rec = {"cycles": to_cycles(p)}
        if label is not None:
            rec["class"] = label(p)
        records.append(rec)
    if args.json:
        print(json.dumps(records))
    else:
        for rec in records:
            line = rec["cycles"]
            if "class" in rec:
                line += f"\t{rec['class']}"
            print(line)
    return 0


def _build_target(parser, args):
    target = args.target
    if target == "l61":
        kwargs = {}
        if args.y0 is not None:
            kwargs["y0"] = args.y0
        try:
            if args.seed:
                kwargs["seed"] = parse_cycles(args.seed, 6)
            if args.pattern:
                kwargs["pattern"] = parse_cycles(args.pattern, 6)
            return build_l61(**kwargs)
        except ValueError as exc:
            parser.error(str(exc))
    if target == "l82":
        return build_l82()
    for prefix, builder in (("knn:", knn_partition), ("l2nn:", l2nn_partition)):
        if target.startswith(prefix):
            try:
                return builder(int(target[len(prefix):]))
            except ValueError as exc:
                parser.error(f"bad target {target}: {exc}")
    parser.error(f"unknown target {target!r}; use l61, l82, knn:N or l2nn:N")
    raise AssertionError("unreachable")


def _cmd_construct(parser, args) -> int:
    if args.y0 is not None and args.target != "l61":
        parser.error("--y0/--seed/--pattern apply to --target l61 only")
    if (args.seed or args.pattern) and args.target != "l61":
        parser.error("--y0/--seed/--pattern apply to --target l61 only")
    if args.golden and args.target != "l61":
        parser.error("--golden applies to --target l61 only")
    if args.audit and args.target != "l82":
        parser.error("--audit applies to --target l82 only")

    cert = _build_target(parser, args)
    out = args.out or f"{args.target.replace(':', '')}.json"
    save_certificate(cert, out)

    payload = {
        "target": args.target,
        "out": out,
        "parts": len(cert.parts),
        "part_size": len(cert.parts[0]) if cert.parts else 0,
    }
    code = 0
    if args.golden:
        missing, unexpected = diff_parts(cert.parts, l61_golden_parts())
        payload["golden_missing"] = [
            [to_cycles(p) for p in part] for part in missing
        ]
        payload["golden_unexpected"] = [
            [to_cycles(p) for p in part] for part in unexpected
        ]
        payload["golden_ok"] = not missing and not unexpected
        code = 0 if payload["golden_ok"] else 1
    if args.audit:
        payload["audit"] = classify_parts(cert.parts)

    if args.json:
        print(json.dumps(payload, sort_keys=True))
        return code
    print(f"wrote {out}: {payload['parts']} parts of {payload['part_size']}")
    if args.golden:
        if payload["golden_ok"]:
            print(f"golden: all {payload['parts']} parts match the reference tables")
        else:
            for part in payload["golden_missing"]:
                print("golden missing:   " + "; ".join(part))
            for part in payload["golden_unexpected"]:
                print("golden unexpected: " + "; ".join(part))
    if args.audit:
        for key, value in payload["audit"].items():
            print(f"audit {key} = {value}")
    return code


def _cmd_verify(parser, args) -> int:
    try:
        cert = load_certificate(args.file)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if args.json:
            print(json.dumps({"ok": False, "error": f"unreadable certificate: {exc}"}))
        else:
            print(f"FAIL: unreadable certificate: {exc}")
        return 1
    report = check_partition(cert, workers=_workers())
    if args.json:
        print(
            json.dumps(
                {
                    "ok": report.ok,
                    "n_parts": report.n_parts,
                    "n_matchings": report.n_matchings,
                    "violations": [str(v) for v in report.violations],
                },
                sort_keys=True,
            )
        )
    else:
        print(report.summary())
        for v in report.violations:
            print(f"  {v}")
    return 0 if report.ok else 1


def _cmd_search(parser, args) -> int:
    if args.target is not None and args.matrix is not None:
        parser.error("--target excludes --matrix")
    if args.target is not None:
        if args.target not in SEARCH_TARGETS:
            parser.error(f"unknown target {args.target!r}; use l41, l51 or l62")
        r, m = SEARCH_TARGETS[args.target]
        spec = l_graph(r, m)
        asserted = True
    else:
        if args.matrix is None:
            parser.error("need --target or --matrix FILE")
        try:
            with open(args.matrix, encoding="ascii") as fh:
                rows = [line.strip() for line in fh if line.strip()]
            spec = from_matrix(rows)
        except (OSError, ValueError) as exc:
            parser.error(f"bad matrix file {args.matrix}: {exc}")
        asserted = False

    try:
        if args.all:
            count = sum(1 for _ in find_perfect_partition(spec, find_all=True, budget=args.budget))
            if args.json:
                print(json.dumps({"partitions": count}))
            else:
                print(f"{count} perfect partition(s)")
            return 0 if (count or not asserted) else 1
        found = find_perfect_partition(spec, budget=args.budget)
    except SearchBudgetExceeded:
        if args.json:
            print(json.dumps({"found": None, "error": "budget exhausted"}))
        else:
            print("UNDECIDED: node budget exhausted")
        return 1

    if found is None:
        if args.json:
            print(json.dumps({"found": False}))
        else:
            print("NONE: no perfect partition exists")
        return 1 if asserted else 0

    if args.out:
        save_certificate(make_certificate(spec, list(found), complete=True), args.out)
    if args.json:
        print(
            json.dumps(
                {
                    "found": True,
                    "parts": [[list(p) for p in part] for part in found],
                    "out": args.out,
                }
            )
        )
    else:
        print(f"FOUND: {len(found)} parts of {degree(spec)}")
        for k, part in enumerate(found, start=1):
            print(f"  part {k}: " + "; ".join(to_cycles(p) for p in part))
        if args.out:
            print(f"wrote {args.out}")
    return 0


def _cmd_check(parser, args) -> int:
    spec = _graph_from_flags(parser, args)
    report = check_extendability(spec, budget=args.budget)
    if args.json:
        print(
            json.dumps(
                {
                    "total": report.total,
                    "blocked": [to_cycles(p) for p in report.blocked],
                },
                sort_keys=True,
            )
        )
    else:
        if report.all_extendable:
            print(f"OK: all {report.total} matchings extend to a 1-factorization")
        else:
            print(f"FAIL: {len(report.blocked)} of {report.total} matchings blocked")
            for p in report.blocked:
                print(f"  {to_cycles(p)}")
    return 0 if report.all_extendable else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfpart",
        description="Count, enumerate, construct, verify and search perfect "
        "partitions of K_{n,n} minus diagonal holes.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("count", help="matching count and divisibility test")
    _add_graph_flags(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the permanent")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = subs.add_parser("enumerate", help="list all perfect matchings")
    _add_graph_flags(p)
    p.add_argument("--classify", action="store_true", help="append block-class tags")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser("construct", help="build a partition certificate file")
    p.add_argument("--target", required=True, help="l61, l82, knn:N or l2nn:N")
    p.add_argument("--y0", type=int, choices=range(2, 7), help="l61 axis point")
    p.add_argument("--seed", help="l61 seed, cycle notation like '(1 2 3)(4 5 6)'")
    p.add_argument("--pattern", help="l61 pattern, cycle notation")
    p.add_argument("--golden", action="store_true", help="diff against reference tables")
    p.add_argument("--audit", action="store_true", help="print the class-usage ledger")
    p.add_argument("--out", help="certificate path (default <target>.json)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = subs.add_parser("verify", help="verify a certificate file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("search", help="exhaustive perfect-partition search")
    p.add_argument("--target", help="l41, l51 or l62")
    p.add_argument("--matrix", metavar="FILE", help="0/1 adjacency rows, one per line")
    p.add_argument("--all", action="store_true", help="count every partition")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--out", help="write the found certificate here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = subs.add_parser("check", help="matching extendability check")
    _add_graph_flags(p)
    p.add_argument("--budget", type=int, help="per-matching search node budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except BrokenPipeError:
        # downstream pager/head closed the stream; not an error of ours
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
