"""Command-line front end.

Exit codes: 0 everything holds, 1 some verdict or claim failed, 2 usage or
parse error, 3 enumeration limit exceeded (or skipped claims under --strict).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .bounds import chain_bound, main_bound_check
from .claims import FAIL, SKIPPED, ManifestError, RunReport, catalog_sweep, run_claims
from .classes import DEFAULT_LIMIT, LimitExceeded, class_count
from .constructions import GroupSpecError, parse_group_spec
from .core import BlockError, minimal_block_systems
from .partitions import bound_sandwich, partition_number

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _nat(text: str) -> int:
    try:
        value = int(text.replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _indices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers: {text!r}") from None


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


# -- subcommands ------------------------------------------------------------


def cmd_order(args) -> int:
    group = parse_group_spec(args.spec)
    _emit(args, {"spec": args.spec, "degree": group.degree, "order": str(group.order())}, str(group.order()))
    return EXIT_OK


def cmd_classes(args) -> int:
    group = parse_group_spec(args.spec)
    result = class_count(group, args.limit)
    doc = {"spec": args.spec, "degree": group.degree, "classes": str(result.count),
           "method": result.method.value}
    _emit(args, doc, str(result.count))
    return EXIT_OK


def cmd_blocks(args) -> int:
    group = parse_group_spec(args.spec)
    systems = minimal_block_systems(group)
    doc = {"spec": args.spec, "primitive": not systems,
           "systems": [[[x + 1 for x in b] for b in s.blocks] for s in systems]}
    _emit(args, doc, "\n".join(str(s) for s in systems) if systems else "primitive")
    return EXIT_OK


def cmd_pn(args) -> int:
    value = partition_number(args.n)
    _emit(args, {"n": args.n, "p": str(value)}, str(value))
    return EXIT_OK


def cmd_pn_bounds(args) -> int:
    if args.n < 1:
        raise UsageError("pn-bounds needs n >= 1")
    r = bound_sandwich(args.n)
    doc = {"n": r.n, "p": str(r.p_n), "lower_ok": r.lower_ok, "upper_ok": r.upper_ok,
           "lower_margin": r.lower_margin, "upper_margin": r.upper_margin, "bits": r.bits, "holds": r.holds}
    text = (f"n={r.n} p={r.p_n} lower_ok={r.lower_ok} upper_ok={r.upper_ok} "
            f"lower_margin={r.lower_margin} upper_margin={r.upper_margin} bits={r.bits}")
    _emit(args, doc, text)
    return EXIT_OK if r.holds else EXIT_FAIL


def cmd_bound_chain(args) -> int:
    try:
        value = chain_bound(args.indices)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"indices": args.indices, "bound": str(value)}, str(value))
    return EXIT_OK


def cmd_bound_main(args) -> int:
    try:
        v = main_bound_check(args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = RunReport(f"bound main --k {args.k} --n {args.n}", args.seed, args.limit, [v])
    _print_report(args, report)
    return EXIT_OK if v.holds else EXIT_FAIL


def _print_report(args, report: RunReport) -> None:
    if args.json:
        sys.stdout.write(report.to_json(args.timings))
    elif args.table:
        sys.stdout.write(report.table())
    else:
        sys.stdout.write(report.to_lines(args.timings))


def _report_exit(args, report: RunReport) -> int:
    if report.count(FAIL):
        return EXIT_FAIL
    if args.strict and report.count(SKIPPED):
        return EXIT_LIMIT
    return EXIT_OK


def cmd_verify_claims(args) -> int:
    text = None
    if args.manifest:
        try:
            with open(args.manifest, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read manifest: {exc}") from None
    report = run_claims(text, args.seed, args.limit)
    _print_report(args, report)
    return _report_exit(args, report)


def cmd_verify_sweep(args) -> int:
    if not 4 <= args.max_degree <= 24:
        raise UsageError("--max-degree must lie in 4..24")
    report = catalog_sweep(args.max_degree, args.seed, args.limit)
    _print_report(args, report)
    return _report_exit(args, report)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=_nat, default=DEFAULT_LIMIT,
                        help=f"largest group order to enumerate (default {DEFAULT_LIMIT})")
    common.add_argument("--seed", type=_nat, default=0, help="seed for sampled checks (default 0)")
    common.add_argument("--json", action="store_true", help="print one JSON document")

    report = argparse.ArgumentParser(add_help=False)
    report.add_argument("--table", action="store_true", help="print a human-readable table")
    report.add_argument("--timings", action="store_true", help="append wall-clock times (not canonical)")
    report.add_argument("--strict", action="store_true", help="exit 3 if any record was skipped")

    parser = argparse.ArgumentParser(prog="permclasses", description="Conjugacy class counts of permutation groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", parents=[common], help="group order")
    p.add_argument("spec")
    p.set_defaults(func=cmd_order)
    p = sub.add_parser("classes", parents=[common], help="number of conjugacy classes")
    p.add_argument("spec")
    p.set_defaults(func=cmd_classes)
    p = sub.add_parser("blocks", parents=[common], help="minimal block systems")
    p.add_argument("spec")
    p.set_defaults(func=cmd_blocks)
    p = sub.add_parser("pn", parents=[common], help="partition number p(n)")
    p.add_argument("n", type=_nat)
    p.set_defaults(func=cmd_pn)
    p = sub.add_parser("pn-bounds", parents=[common], help="check the exponential sandwich on p(n)")
    p.add_argument("n", type=_nat)
    p.set_defaults(func=cmd_pn_bounds)

    bound = sub.add_parser("bound", help="evaluate a single bound").add_subparsers(dest="which", required=True)
    p = bound.add_parser("chain", parents=[common], help="product of p(a_i) powers")
    p.add_argument("--indices", type=_indices, required=True, metavar="A1,A2,...")
    p.set_defaults(func=cmd_bound_chain)
    p = bound.add_parser("main", parents=[common, report], help="k^3 <= 5^(n-1)")
    p.add_argument("--k", type=_nat, required=True)
    p.add_argument("--n", type=_nat, required=True)
    p.set_defaults(func=cmd_bound_main)

    verify = sub.add_parser("verify", help="run claim manifests and sweeps").add_subparsers(dest="which", required=True)
    p = verify.add_parser("claims", parents=[common, report], help="evaluate a claims manifest")
    p.add_argument("--manifest", help="manifest file (default: the built-in one)")
    p.set_defaults(func=cmd_verify_claims)
    p = verify.add_parser("sweep", parents=[common, report], help="check bounds over the group catalog")
    p.add_argument("--max-degree", type=_nat, required=True)
    p.set_defaults(func=cmd_verify_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(exc.caret(), file=sys.stderr)
        return EXIT_USAGE
    except (ManifestError, BlockError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
