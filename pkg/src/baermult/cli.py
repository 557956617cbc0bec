"""Command line front end.

Exit codes: 0 success / all checks pass, 1 computation refused (hypotheses
or resource caps), 2 usage or parse error, 3 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify
from .engine import HypothesisError, multiplier
from .exponents import ClassRow, witt
from .groups import GroupInvariantError, GroupSyntaxError, parse_group, render_group
from .hall import ENV_MAX_ALPHABET, ENV_MAX_WEIGHT, HallTable, ResourceLimitError

EXIT_OK, EXIT_REFUSED, EXIT_USAGE, EXIT_FAILED = 0, 1, 2, 3
PRINT_CAP = 200


def _row(text: str) -> ClassRow:
    try:
        return ClassRow(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad class row {text!r}: {exc}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _emit(args, record: dict, human: str) -> None:
    if args.format == "record":
        print(json.dumps(record, sort_keys=True, default=str))
    else:
        print(human)


# -- subcommands -------------------------------------------------------------


def cmd_witt(args) -> int:
    value = witt(args.weight, args.letters)
    _emit(args, {"weight": args.weight, "letters": args.letters, "value": value}, str(value))
    return EXIT_OK


def cmd_multiplier(args) -> int:
    try:
        g = parse_group(args.group)
    except GroupSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupInvariantError as exc:
        print(f"invalid group: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = multiplier(g, args.classes)
    except HypothesisError as exc:
        if args.format == "record":
            _emit(args, {"group": render_group(g), "row": list(args.classes), "refused": str(exc),
                         "conditions": [c.__dict__ for c in exc.conditions]}, "")
        else:
            print(f"hypothesis violation: {exc}")
            for c in exc.conditions:
                print(f"  {c}")
        return EXIT_REFUSED
    record = {
        "group": render_group(g),
        "row": list(args.classes),
        "structure": {"free_rank": rep.structure.free_rank, "torsion": [list(t) for t in rep.structure.torsion]},
        "structure_text": str(rep.structure),
        "order": str(rep.order),
        "theorem": rep.theorem.value,
        "agrees_with": [t.value for t in rep.agrees_with],
        "exponents": {k: [list(p) for p in v] for k, v in rep.exponents.items()},
        "conditions": [c.__dict__ for c in rep.conditions],
    }
    lines = [rep.summary()]
    for name, seq in rep.exponents.items():
        lines.append("  " + ", ".join(f"{name}_{i}={v}" for i, v in seq))
    lines.extend(f"  {c}" for c in rep.conditions)
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


def cmd_hall(args) -> int:
    try:
        table = HallTable(args.letters)
        ids = table.level(args.weight)
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    if args.contains is not None:
        if not 1 <= args.contains <= args.letters:
            print(f"--contains must lie in 1..{args.letters}", file=sys.stderr)
            return EXIT_USAGE
        ids = [i for i in ids if table.contains(i, args.contains)]
    shown = [table.element(i).render() for i in ids[:PRINT_CAP]]
    record = {"letters": args.letters, "weight": args.weight, "contains": args.contains,
              "count": len(ids), "elements": shown, "truncated": len(ids) > PRINT_CAP}
    lines = list(shown)
    if len(ids) > PRINT_CAP:
        lines.append(f"... ({len(ids) - PRINT_CAP} more not shown)")
    lines.append(f"count {len(ids)}")
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        rep = verify.classify_extremal(args.prime, args.m, args.classes, args.n)
    except HypothesisError as exc:
        print(f"out of hypothesis: {exc}")
        return EXIT_REFUSED
    if args.format == "record":
        for r in rep.records():
            print(r.to_json())
        print(json.dumps({"maximizers": [list(p) for p in rep.maximizers], "target": rep.target_exponent,
                          "theorem": rep.theorem.value, "ok": rep.unique_elementary_maximizer}, sort_keys=True))
    else:
        print(f"p={rep.p} m={rep.m} row=({rep.row}) n={rep.n}  target {rep.p}^{rep.target_exponent} "
              f"({rep.theorem.label})")
        print(f"{'partition':<24}order")
        for part, e in rep.orders:
            mark = "  <- max" if part in rep.maximizers else ""
            print(f"{str(part):<24}{rep.p}^{e}{mark}")
        print("maximizer " + ", ".join(str(p) for p in rep.maximizers))
        status = "unique elementary maximizer" if rep.unique_elementary_maximizer else "CLAIM FAILS"
        print(status)
    return EXIT_OK if rep.unique_elementary_maximizer else EXIT_FAILED


def _print_report(args, report: verify.Report) -> int:
    if args.format == "record":
        print(report.to_jsonl())
    else:
        for r in report.records:
            if r.status != verify.PASS or args.verbose:
                extra = f" ({r.note})" if r.note else ""
                print(f"[{r.status}] {r.check} {r.input}: {r.relation}; lhs={r.lhs} rhs={r.rhs}{extra}")
        counts = report.counts()
        print(", ".join(f"{k} {v}" for k, v in counts.items()) + (" -- all pass" if report.ok else ""))
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_verify(args) -> int:
    report = verify.Report(caps={"max_m": getattr(args, "m", None)})
    check = args.check
    if check == "counterexample":
        hit = verify.find_inequality_counterexample(args.classes.head, args.bound)
        if args.format == "record":
            print(json.dumps({"c": args.classes.head, "bound": args.bound,
                              "result": list(hit) if hit else None}))
        else:
            print(f"i={hit[0]}: {hit[1]} ≥ {hit[2]}" if hit else f"none up to {args.bound}")
        return EXIT_OK if hit else EXIT_FAILED
    if check == "bounds":
        report.extend(verify.check_bounds(args.prime, args.m, args.classes))
    elif check == "extremal":
        report.extend(verify.extremality_records(args.prime, args.m, args.classes, args.n))
    elif check == "equality":
        report.caps = {"n_max": args.m, "c_max": args.classes.head}
        report.extend(verify.equality_records(args.m, args.classes.head))
    elif check == "monotonicity":
        report.caps = {"i_max": args.m}
        try:
            report.extend(verify.verify_difference_monotonicity(args.classes, args.n, args.m))
        except ValueError as exc:
            print(f"out of hypothesis: {exc}")
            return EXIT_REFUSED
    return _print_report(args, report)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="baermult",
        description="Polynilpotent multipliers of abelian groups and nilpotent products of cyclic groups.",
        epilog=f"Resource caps for Hall enumeration: {ENV_MAX_ALPHABET} (default 2000), "
        f"{ENV_MAX_WEIGHT} (default 8).",
    )
    parser.add_argument("--format", choices=("human", "record"), default="human")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "record"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witt", parents=[common], help="number of basic commutators of weight w on n letters")
    p.add_argument("-w", "--weight", type=_positive, required=True)
    p.add_argument("-n", "--letters", type=_natural, required=True)
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("multiplier", parents=[common], help="structure of a polynilpotent multiplier")
    p.add_argument("-g", "--group", required=True, help='e.g. "Z_9 *2* Z_3" or "Z^2 + Z_4 + Z_2"')
    p.add_argument("-c", "--classes", type=_row, required=True, help="class row, e.g. 2 or 2,1")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("hall", parents=[common], help="enumerate basic commutators")
    p.add_argument("-n", "--letters", type=_natural, required=True)
    p.add_argument("-w", "--weight", type=_positive, required=True)
    p.add_argument("--contains", type=_positive, default=None, help="keep elements involving this letter")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("classify", parents=[common], help="multiplier orders over all p-groups of order p^m")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("-m", type=_positive, required=True)
    p.add_argument("-c", "--classes", type=_row, required=True)
    p.add_argument("-n", type=_positive, default=1, help="nilpotent product class (1 = direct sum)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run a named check suite")
    p.add_argument("check", choices=("counterexample", "bounds", "extremal", "equality", "monotonicity"))
    p.add_argument("-p", "--prime", type=int, default=2)
    p.add_argument("-m", type=_positive, default=verify.DEFAULT_MAX_M,
                   help="sweep cap (max total exponent, max n, or i_max)")
    p.add_argument("-c", "--classes", type=_row, default=ClassRow((1,)))
    p.add_argument("-n", type=_positive, default=1)
    p.add_argument("--bound", type=_positive, default=100)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
