"""Command-line entry point: solve, gadget, verify, search, enumerate."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import Graph6Error, GraphSizeError, PreconditionError, SettledQuery, UnsupportedError
from .gadgets import FAMILIES, GadgetSpec, build, verify as verify_gadget
from .graph import read_graph6_file, to_graph6
from .harness import catalog
from .harness.enumeration import CLASSES, enumerate_graphs
from .harness.report import RunConfig, expand, run
from .harness.search import PROBLEMS, found_any, search_counterexample
from .solvers import MEASURES, SOLVERS


def _cmd_solve(args) -> int:
    solve = SOLVERS[args.measure]
    for g in read_graph6_file(args.input):
        sol = solve(g)
        if sol is None:
            print(f"{to_graph6(g)}\tnone")
        else:
            print(f"{to_graph6(g)}\t{sol.size}\t{','.join(map(str, sol.vertices()))}")
    return 0


def _cmd_gadget(args) -> int:
    spec = GadgetSpec(args.family, p=args.p, q=args.q, r=args.r, s=args.s)
    if args.emit == "g6":
        print(to_graph6(build(spec)))
        return 0
    rows = verify_gadget(spec)
    for row in rows:
        mark = "ok  " if row["pass"] else "FAIL"
        print(f"{mark} {row['gadget']}: {row['check']} (observed {row['observed']}, target {row['target']})")
    return 0 if all(r["pass"] for r in rows) else 1


def _params(args) -> dict | None:
    p = {k: getattr(args, k) for k in ("r", "s", "H") if getattr(args, k, None) is not None}
    return p or None


def _cmd_verify(args) -> int:
    config = RunConfig(
        max_n=args.max_n,
        statements=expand(args.statement),
        params=_params(args),
        corpus=args.corpus,
        out_dir=args.out,
        jobs=args.jobs,
        gadgets=args.gadgets,
    )
    report, status = run(config)
    for block in report["statements"]:
        params = ",".join(f"{k}={v}" for k, v in block["params"].items())
        print(
            f"{block['id']:8} {params:12} applicable={block['applicable']} pass={block['pass']} "
            f"fail={block['fail']} tight={block.get('tight_count', '-')}"
        )
    for row in report.get("gadgets", ()):
        print(f"{row['gadget']:24} checks={row['checks']} pass={row['pass']}")
    if args.out:
        print(f"report written to {args.out}")
    return status


def _cmd_search(args) -> int:
    report = search_counterexample(args.problem, args.max_n, args.h)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 3 if found_any(report) else 0


def _cmd_enumerate(args) -> int:
    with open(args.out, "w") as fh:
        count = 0
        for g in enumerate_graphs(args.n, args.cls):
            fh.write(to_graph6(g) + "\n")
            count += 1
    print(f"{count} graphs written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indtrans", description="Independent transversal toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact minimum transversal for each graph in a graph6 file")
    p.add_argument("--input", required=True)
    p.add_argument("--measure", required=True, choices=MEASURES)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("gadget", help="build an extremal gadget or check its expectations")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for name in "pqrs":
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--emit", choices=("g6", "expectations"), default="g6")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("verify", help="check catalog statements over a corpus")
    p.add_argument("--statement", required=True, action="append",
                   help=f"statement id, a constructive id, or one of all/VC/FVS/OCT/ID/constructive; "
                        f"known: {', '.join(catalog.BY_ID)}")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--H", help="pattern for statements parametrised by H")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--corpus")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--gadgets", action="store_true", help="also run the gadget expectation suite")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="bounded scan for an unresolved case")
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--h", action="append", help="forbidden pattern (repeatable)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("enumerate", help="write one graph per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", default="all", choices=tuple(CLASSES))
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SettledQuery as exc:
        print(f"settled: {exc}", file=sys.stderr)
        return 4
    except (Graph6Error, GraphSizeError, PreconditionError, UnsupportedError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
