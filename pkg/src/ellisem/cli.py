"""Command line interface.

Exit codes: 0 ok, 1 input error, 2 verification or consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as report_mod
from .errors import ConsistencyError, EllisemError, ParseError
from .exports import eggbox_dot
from .fiber import build_fiber_semigroup
from .golden import golden_checks, load_bundled
from .oracle import SUITES, run_suites
from .substitution import parse_substitution

BUNDLED = ("paper", "bijective")


def _load_substitution(args):
    if args.bundled:
        return load_bundled(args.bundled)
    if args.path is None:
        raise ParseError("a substitution file (or --bundled NAME) is required")
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    return parse_substitution(text)


def cmd_analyze(args) -> int:
    subst = _load_substitution(args)
    doc = report_mod.analyze(
        subst,
        depth=args.depth,
        witness_count=args.witnesses,
        horizon=args.window,
    )
    if args.format == "json":
        rendered = report_mod.to_json(doc)
        suffix = "json"
    elif args.format == "dot":
        fib = build_fiber_semigroup(subst)
        rendered = eggbox_dot(fib.base, names=list(fib.words()))
        suffix = "dot"
    else:
        rendered = report_mod.render_text(doc)
        suffix = "txt"
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        target = out_dir / f"analysis.{suffix}"
        target.write_text(rendered)
        if not args.quiet:
            print(f"wrote {target}")
    else:
        sys.stdout.write(rendered)
    return 0


def cmd_verify_paper_example(args) -> int:
    subst = None
    if args.file:
        subst = parse_substitution(Path(args.file).read_text())
    results = golden_checks(subst)
    ok = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "assertions": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "ok": ok,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in results:
            if r.passed:
                print(f"PASS  {r.name}")
            else:
                print(f"FAIL  {r.name}")
                print(f"      expected vs got: {r.detail}")
        if ok:
            print(f"all {len(results)} golden assertions pass")
        else:
            bad = sum(1 for r in results if not r.passed)
            print(f"{bad} of {len(results)} golden assertions FAILED")
    return 0 if ok else 2


def cmd_oracle(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(
        names,
        max_degree=args.degree,
        corpus_degree=args.corpus_degree,
        degree4_samples=args.degree4_samples,
        seed=args.seed,
        max_group=args.max_group,
        max_index=args.max_index,
        z3_samples=args.z3_samples,
    )
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for failure in r.failures:
                print(f"  FAIL: {failure}")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellisem",
        description=(
            "Exact structure theory for finite transformation semigroups and "
            "fiber shadows of Ellis semigroups of constant-length substitutions"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline on a substitution file")
    p.add_argument("path", nargs="?", help="substitution file (text or JSON)")
    p.add_argument("--bundled", choices=BUNDLED, help="use a bundled example")
    p.add_argument("--depth", type=int, default=8, help="odometer truncation depth K")
    p.add_argument(
        "--window",
        type=int,
        default=None,
        help="scan horizon for Li-Yorke witnesses (default: length^6)",
    )
    p.add_argument("--witnesses", type=int, default=5, help="witness pairs to emit")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out", help="directory to write the report into")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser(
        "verify-paper-example",
        help="run the 14 golden assertions on the bundled worked example",
    )
    p.add_argument("--file", help="override the bundled substitution (negative tests)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify_paper_example)

    p = sub.add_parser("oracle", help="run the brute-force verification suites")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--degree", type=int, default=4, help="max degree for cpreg")
    p.add_argument(
        "--corpus-degree",
        type=int,
        default=3,
        help="max degree of the exhaustive closure corpus (kernel/union suites)",
    )
    p.add_argument("--degree4-samples", type=int, default=12)
    p.add_argument("--max-group", type=int, default=3)
    p.add_argument("--max-index", type=int, default=3)
    p.add_argument("--z3-samples", type=int, default=8)
    p.add_argument("--seed", type=int, default=20240501)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except EllisemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
