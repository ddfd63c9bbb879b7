"""outfn-euler command line: chi, verify, graphs, asym.

Exit status: 0 pass, 1 mathematical failure, 2 usage or resource problem.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .arith import rational_str

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_RESOURCE = 0, 1, 2
ROUTE_CAP = 50


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _int_list(text):
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 2 for v in values):
        raise argparse.ArgumentTypeError("n values must be integers >= 2")
    return values


def _precision_default():
    value = os.environ.get("OUTFN_PRECISION")
    return int(value) if value else 256


def header(config: dict) -> str:
    items = " ".join(f"{k}={config[k]}" for k in sorted(config))
    return f"# outfn-euler v{__version__}, config: {items}"


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="outfn-euler", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"outfn-euler {__version__}")
    parser.add_argument("--precision", type=_positive, default=None,
                        help="bits for floating diagnostics (default $OUTFN_PRECISION or 256)")
    parser.add_argument("--cap", type=_positive, default=None,
                        help="candidate cap per degree sequence in graph enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi", help="exact table of ch_n and Ch_n")
    chi.add_argument("--max-n", type=int, required=True)
    chi.add_argument("--route", choices=["lambert", "implicit", "laplace-lie"], default="lambert")
    chi.add_argument("--format", choices=["csv", "json"], default="csv")
    chi.add_argument("--output")
    chi.add_argument("--route-cap", type=_positive, default=ROUTE_CAP,
                     help="largest max-n accepted for the implicit and laplace-lie routes")

    verify = sub.add_parser("verify", help="run verification suites, JSON report")
    verify.add_argument("--suite", choices=["all", "series", "hopf", "graphs", "routes", "asym"], default="all")
    verify.add_argument("--depth", type=_positive, default=None)
    verify.add_argument("--output")

    graphs = sub.add_parser("graphs", help="list graph classes with a character")
    graphs.add_argument("--rank", type=int, required=True)
    graphs.add_argument("--leaves", type=int, default=0)
    graphs.add_argument("--character", choices=["tau", "sigma", "xi"], default="tau")
    graphs.add_argument("--dump", help="write the classes in the graph exchange format")

    asym = sub.add_parser("asym", help="growth-law diagnostics as CSV")
    asym.add_argument("kind", choices=["theorem-a", "theorem-b"])
    asym.add_argument("--n", type=_int_list, default=None)
    asym.add_argument("--R", type=int, default=1)
    asym.add_argument("--output")
    return parser


def cmd_chi(args, parser):
    from .chi import chi_table

    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    if args.route != "lambert" and args.max_n > args.route_cap:
        print(f"route {args.route} is capped at max-n {args.route_cap}; raise --route-cap to override",
              file=sys.stderr)
        return EXIT_RESOURCE
    table = chi_table(args.max_n, args.route)
    head = header({"command": "chi", "max_n": args.max_n, "route": args.route, "format": args.format})
    text = table.to_csv(head) if args.format == "csv" else table.to_json(head)
    if args.output:
        _emit(text, args.output)
        for n in range(1, min(5, args.max_n) + 1):
            print(f"ch_{n} = {rational_str(table.ch[n])}")
    else:
        _emit(text, None)
    return EXIT_OK


def cmd_verify(args, parser):
    from .asymptotics import PrecisionError
    from .graphs import EnumerationCapExceeded
    from .suites import run_suite

    config = {"command": "verify", "suite": args.suite, "depth": args.depth or "default",
              "precision": args.precision or _precision_default(), "cap": args.cap or "default"}
    report = {"header": header(config)}
    try:
        results = run_suite(args.suite, args.depth)
    except (EnumerationCapExceeded, PrecisionError, MemoryError) as exc:
        report.update(status="resource", error=f"{type(exc).__name__}: {exc}")
        code = EXIT_RESOURCE
    else:
        failed = [f"{suite}: {c['name']}" for suite, r in results.items() for c in r["checks"] if not c["ok"]]
        report.update(status="fail" if failed else "pass", failed=failed, suites=results)
        code = EXIT_FAIL if failed else EXIT_OK
    _emit(json.dumps(report, indent=1, sort_keys=True) + "\n", args.output)
    if args.output:
        print(f"{report['status']}: report written to {args.output}")
    return code


def cmd_graphs(args, parser):
    from .graphs import CHARACTERS, enumerate_graphs, leaf_labeled_character_sum

    if args.leaves < 0:
        parser.error("--leaves must be nonnegative")
    if args.rank < 0 or args.rank == 0 and args.leaves < 3 or args.rank == 1 and args.leaves < 1:
        parser.error("no admissible connected graphs with that rank and leaf count")
    char = CHARACTERS[args.character]
    classes = enumerate_graphs(args.rank - 1, args.leaves)
    print(header({"command": "graphs", "rank": args.rank, "leaves": args.leaves, "character": args.character}))
    total = 0
    for i, cls in enumerate(classes):
        value = char(cls.graph)
        total += value / cls.aut
        leaf_at = [cls.graph.vertex_of[h] for h in cls.graph.leaves]
        print(f"{i}: vertices={cls.graph.n_vertices} edges={list(cls.graph.edge_ends)} "
              f"leaves_at={leaf_at} aut={cls.aut} {args.character}={rational_str(value)}")
    print(f"classes = {len(classes)}")
    print(f"sum {args.character}/|Aut| = {rational_str(total)}")
    if args.leaves:
        labeled = leaf_labeled_character_sum(args.rank, args.leaves, char)
        print(f"leaf-labeled sum {args.character}/|PAut| = {rational_str(labeled)}")
    if args.dump:
        records = [dict(cls.graph.to_dict(), aut=cls.aut) for cls in classes]
        _emit(json.dumps({"rank": args.rank, "leaves": args.leaves, "classes": records}, indent=1) + "\n",
              args.dump)
    return EXIT_OK


def cmd_asym(args, parser):
    from . import asymptotics as asym

    precision = args.precision or _precision_default()
    if args.kind == "theorem-a":
        ns = args.n or [125, 250, 500, 1000]
        values = asym.theorem_a_ratio(ns, precision)
        head = header({"command": "asym", "kind": args.kind, "n": ",".join(map(str, ns)), "precision": precision})
        _emit(asym.theorem_a_csv(ns, values, head), args.output)
        return EXIT_OK
    if args.R < 1:
        parser.error("--R must be at least 1")
    ns = args.n or [50, 100, 200, 400]
    if any(n <= args.R for n in ns):
        parser.error("every n must exceed R")
    try:
        rows = [(n, args.R, asym.theorem_b_remainder(n, args.R, precision)) for n in ns]
    except asym.PrecisionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RESOURCE
    head = header({"command": "asym", "kind": args.kind, "R": args.R, "n": ",".join(map(str, ns)),
                   "precision": precision})
    _emit(asym.theorem_b_csv(rows, head), args.output)
    return EXIT_OK


COMMANDS = {"chi": cmd_chi, "verify": cmd_verify, "graphs": cmd_graphs, "asym": cmd_asym}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision is not None:
        if args.precision < 128:
            parser.error("--precision must be at least 128 bits")
        os.environ["OUTFN_PRECISION"] = str(args.precision)
    if args.cap is not None:
        from .graphs import set_enumeration_cap

        set_enumeration_cap(args.cap)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
