"""Command line interface.

Exit codes: 0 success / graphs equal, 1 verification failure, 2 usage or
spec error, 3 graphs differ, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import analyze
from .constructions import GroupSpec, list_fixtures
from .errors import (
    BudgetExceeded,
    FixtureOrderMismatch,
    GKGraphError,
    MalformedFixture,
    MissingFixture,
    UnknownFormat,
    UnknownSpec,
)
from .groups import DEFAULT_BUDGET
from .primegraph import edge_difference, export, graphs_equal, to_json
from .report import verify_paper
from .spectrum import DEFAULT_SAMPLES, SpectrumCache

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DIFFER, EXIT_BUDGET = 0, 1, 2, 3, 4


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def _cache_from(args) -> SpectrumCache | None:
    if args.no_cache:
        return None
    directory = args.cache_dir or os.environ.get("PG_CACHE_DIR") or Path.home() / ".cache" / "gkgraph"
    return SpectrumCache(directory)


def _analyze(args, spec):
    return analyze(spec, budget=args.max_enumerate, seed=args.seed, samples=args.samples,
                   cache=_cache_from(args), fixtures_dir=args.fixtures)


def _certified(args, spec):
    a = _analyze(args, spec)
    if not a.certified:
        raise BudgetExceeded(a.order, args.max_enumerate)
    return a


def cmd_spectrum(args) -> int:
    a = _analyze(args, args.spec)
    out = [
        f"group: {a.spec}",
        f"order: {a.order}",
        f"strategy: {a.strategy}" + (" (cached)" if a.cached else ""),
        ("spectrum" if a.certified else "spectrum (lower bound)") + f": {_fmt_set(a.spectrum.orders)}",
        f"mu: {_fmt_set(a.mu.maxima)}",
    ]
    if a.witnesses is not None:
        out.append(f"sampled orders (seed {args.seed}, {args.samples} samples): "
                   f"{_fmt_set(a.witnesses.orders)}")
    out += [f"note: {n}" for n in a.notes]
    print("\n".join(out))
    if a.contradictions:
        print(f"error: sampled orders {list(a.contradictions)} contradict the fixture", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_graph(args) -> int:
    a = _certified(args, args.spec)
    sys.stdout.write(export(a.graph, args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_compare(args) -> int:
    a = _certified(args, args.a)
    b = _certified(args, args.b)
    print(f"{a.spec}: {to_json(a.graph)}  (order {a.order}, {a.strategy})")
    print(f"{b.spec}: {to_json(b.graph)}  (order {b.order}, {b.strategy})")
    if graphs_equal(a.graph, b.graph):
        print("prime graphs are equal")
        return EXIT_OK
    print("prime graphs differ: " + json.dumps(edge_difference(a.graph, b.graph), sort_keys=True))
    return EXIT_DIFFER


def cmd_verify(args) -> int:
    def progress(claim):
        if args.verbose:
            print(f"  {claim.id} {claim.outcome} in {claim.elapsed:.1f}s", file=sys.stderr)

    report = verify_paper(seed=args.seed, budget=args.max_enumerate, samples=args.samples,
                          cache=_cache_from(args), fixtures_dir=args.fixtures,
                          only=args.only, progress=progress)
    if args.json:
        Path(args.json).write_text(report.to_json(timings=args.timings))
    if args.format == "json":
        sys.stdout.write(report.to_json(timings=args.timings))
    else:
        sys.stdout.write(report.to_text(timings=args.timings))
    if not report.passed:
        print("failing claims: " + ", ".join(report.failing), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_fixtures(args) -> int:
    for name in list_fixtures(args.fixtures):
        print(name)
    return EXIT_OK


def _spec_arg(text):
    try:
        return str(GroupSpec.parse(text))
    except UnknownSpec as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-enumerate", type=int, default=DEFAULT_BUDGET, metavar="N",
                        help="largest group to enumerate element by element (default %(default)s)")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, metavar="N",
                        help="random elements drawn for groups beyond the budget (default %(default)s)")
    common.add_argument("--cache-dir", metavar="PATH",
                        help="spectrum cache directory (default $PG_CACHE_DIR or ~/.cache/gkgraph)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--fixtures", metavar="PATH", help="directory of fixture JSON files")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="gkgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gkgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="element orders and their maxima")
    p.add_argument("spec", type=_spec_arg)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("graph", parents=[common], help="print the prime graph")
    p.add_argument("spec", type=_spec_arg)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("compare", parents=[common], help="compare two prime graphs")
    p.add_argument("a", type=_spec_arg)
    p.add_argument("b", type=_spec_arg)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="run the claim suite")
    p.add_argument("target", choices=("paper",))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timings", action="store_true", help="include elapsed seconds per claim")
    p.add_argument("--only", nargs="+", metavar="ID", help="run only these claim ids")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", parents=[common], help="list available fixture groups")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UnknownSpec, MissingFixture, MalformedFixture, FixtureOrderMismatch, UnknownFormat) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GKGraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
