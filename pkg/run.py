#!/usr/bin/env python3
"""
fibcube: O- and I-Fibonacci (p,r)-cubes and their Cartesian factorization.

Usage:
    python run.py gen --family o -p 2 -r 2 -n 4          # Words, one per line
    python run.py count --family o -p 1 -r 1 -n 5        # Number of words
    python run.py build --family o -p 2 -r 2 -n 4 --format dot -o cube.dot
    python run.py factor --family o -p 1 -r 3 -n 3       # or: factor --input graph.txt
    python run.py prime --family o -p 2 -r 2 -n 5
    python run.py iso o:2,2,4 i:3,2,4                    # Cube specs or edge-list files
    python run.py stats --family i -p 2 -r 2 -n 6
    python run.py verify --suite theorem14 --pmax 3 --rmax 3 --nmax 8 --cap 300
"""

import argparse
import logging
import os
import sys

import pandas as pd

from fibcube.config import Config
from fibcube.errors import FibcubeError, InvalidParamsError
from fibcube.export import read_edge_list, serialize_factorization, write_dot, write_edge_list
from fibcube.factorization import factorize
from fibcube.graph import Graph, build_cube, degree_sequence, diameter, is_isomorphic
from fibcube.relations import is_prime
from fibcube.words import CubeParams, Family, count_words, enumerate_words
from verify.report import generate_verify_report
from verify.suites import SUITES, GridBounds, all_passed, format_tap, results_frame, run_suite

logger = logging.getLogger("fibcube.cli")


def _at_least(minimum: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    parse.__name__ = f"integer >= {minimum}"
    return parse


def _add_cube_args(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--family", type=Family.parse, required=required, help="o or i")
    parser.add_argument("-p", type=_at_least(1), required=required)
    parser.add_argument("-r", type=_at_least(1), required=required)
    parser.add_argument("-n", type=_at_least(0), required=required)


def _add_graph_source(parser: argparse.ArgumentParser):
    _add_cube_args(parser, required=False)
    parser.add_argument("--input", metavar="FILE", help="Edge-list file instead of a cube")


def _cube_params(args) -> CubeParams:
    return CubeParams(args.family, args.p, args.r, args.n)


def _load_graph_file(path: str) -> Graph:
    with open(path, encoding="ascii") as f:
        return read_edge_list(f.read())


def _graph_from_args(parser: argparse.ArgumentParser, args) -> Graph:
    if args.input:
        return _load_graph_file(args.input)
    if None in (args.family, args.p, args.r, args.n):
        parser.error("give either --input FILE or all of --family, -p, -r, -n")
    return build_cube(_cube_params(args))


def _graph_from_operand(operand: str) -> Graph:
    """`o:p,r,n` / `i:p,r,n` cube spec, or a path to an edge-list file."""
    if os.path.exists(operand):
        return _load_graph_file(operand)
    try:
        return build_cube(CubeParams.parse(operand))
    except InvalidParamsError:
        raise InvalidParamsError(f"{operand!r} is neither a file nor a cube spec like o:2,2,4") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibcube", description="Fibonacci (p,r)-cubes and Cartesian factorization")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Print the words of a cube, one per line")
    _add_cube_args(gen)

    count = sub.add_parser("count", help="Print the number of words")
    _add_cube_args(count)

    build = sub.add_parser("build", help="Export a cube as an edge list or DOT")
    _add_cube_args(build)
    build.add_argument("--format", choices=["edges", "dot"], default="edges")
    build.add_argument("-o", "--output", metavar="FILE", help="Write to FILE instead of stdout")

    factor = sub.add_parser("factor", help="Prime factorization with respect to the Cartesian product")
    _add_graph_source(factor)

    prime = sub.add_parser("prime", help="Print prime or composite")
    _add_graph_source(prime)

    iso = sub.add_parser("iso", help="Decide whether two graphs are isomorphic")
    iso.add_argument("first", help="Cube spec (o:p,r,n) or edge-list file")
    iso.add_argument("second", help="Cube spec (i:p,r,n) or edge-list file")

    stats = sub.add_parser("stats", help="Order, size, degrees and diameter")
    _add_graph_source(stats)

    verify = sub.add_parser("verify", help="Run an acceptance suite, TAP output")
    verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    verify.add_argument("--pmax", type=_at_least(1), default=3)
    verify.add_argument("--rmax", type=_at_least(1), default=3)
    verify.add_argument("--nmax", type=_at_least(1), default=8)
    verify.add_argument("--cap", type=_at_least(1), default=None, help="Vertex cap per cell")
    verify.add_argument("--csv", metavar="FILE", help="Also write the per-cell table as CSV")
    verify.add_argument("--report", action="store_true", help="Also write the HTML report")
    return parser


def _write(text: str, output=None):
    if output:
        with open(output, "w", encoding="ascii", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _run(parser: argparse.ArgumentParser, args) -> int:
    if args.command == "gen":
        _write("".join(f"{w}\n" for w in enumerate_words(_cube_params(args))))
    elif args.command == "count":
        _write(f"{count_words(_cube_params(args))}\n")
    elif args.command == "build":
        cube = build_cube(_cube_params(args))
        text = write_dot(cube) if args.format == "dot" else write_edge_list(cube)
        _write(text, args.output)
    elif args.command == "factor":
        F = factorize(_graph_from_args(parser, args))
        _write("prime\n" if F.is_prime else serialize_factorization(F))
    elif args.command == "prime":
        _write("prime\n" if is_prime(_graph_from_args(parser, args)) else "composite\n")
    elif args.command == "iso":
        same = is_isomorphic(_graph_from_operand(args.first), _graph_from_operand(args.second))
        _write("isomorphic\n" if same else "not-isomorphic\n")
    elif args.command == "stats":
        G = _graph_from_args(parser, args)
        degrees = degree_sequence(G)
        diam = diameter(G)
        lines = [
            f"vertices {G.vertex_count}",
            f"edges {G.edge_count}",
            "degrees " + " ".join(map(str, degrees)),
            f"diameter {'inf' if diam is None else diam}",
        ]
        counts = pd.Series(degrees, dtype="int64").value_counts().sort_index()
        lines.extend(f"degree {d} {c}" for d, c in counts.items())
        _write("".join(line + "\n" for line in lines))
    elif args.command == "verify":
        bounds = GridBounds(args.pmax, args.rmax, args.nmax, args.cap)
        results = run_suite(args.suite, bounds)
        _write(format_tap(results))
        if args.csv:
            results_frame(results).to_csv(args.csv, index=False, lineterminator="\n")
        if args.report:
            path = generate_verify_report(results, bounds)
            logger.warning("report written to %s", path)
        return 0 if all_passed(results) else 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else Config.LOG_LEVEL
    logging.basicConfig(level=level, format="  [%(levelname)s] %(name)s: %(message)s", stream=sys.stderr)

    try:
        return _run(parser, args)
    except (FibcubeError, OSError) as e:
        print(f"fibcube: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
