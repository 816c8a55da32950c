#!/usr/bin/env python3
"""
Run every acceptance suite and generate the report.

Usage:
    python -m verify.run_verify                       # Default grid: p,r <= 3, n <= 8
    python -m verify.run_verify --nmax 10 --cap 500   # Larger grid
    python -m verify.run_verify --suite lemma32       # One suite only
    python -m verify.run_verify --no-open             # Don't open the browser
"""

import argparse
import json
import logging
import os
import sys
import webbrowser
from dataclasses import asdict

from fibcube.config import Config
from verify.report import generate_verify_report
from verify.suites import SUITES, GridBounds, all_passed, run_suite, summarize


def open_report(path: str) -> bool:
    """Hand the report to the default browser; print its URL if none takes it."""
    url = "file://" + os.path.abspath(path)
    opened = webbrowser.open(url)
    if not opened:
        print(f"  Open manually: {url}")
    return opened


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Run the Fibonacci cube acceptance suites")
    parser.add_argument("--suite", choices=sorted(SUITES), action="append", help="Suite to run (repeatable; default: all)")
    parser.add_argument("--pmax", type=int, default=3, help="Largest p (default: 3)")
    parser.add_argument("--rmax", type=int, default=3, help="Largest r besides r = n (default: 3)")
    parser.add_argument("--nmax", type=int, default=8, help="Largest n (default: 8)")
    parser.add_argument("--cap", type=int, default=None, help="Vertex cap per cell (default: per suite)")
    parser.add_argument("--no-open", action="store_true", help="Don't open the HTML report")
    args = parser.parse_args(argv)

    logging.basicConfig(level=Config.LOG_LEVEL, format="  [%(levelname)s] %(name)s: %(message)s")
    bounds = GridBounds(args.pmax, args.rmax, args.nmax, args.cap)

    results = []
    for name in args.suite or list(SUITES):
        print(f"Running {name}...")
        results.extend(run_suite(name, bounds))

    print()
    print(summarize(results).to_string(index=False))

    # Save raw results
    os.makedirs(Config.REPORTS_DIR, exist_ok=True)
    results_path = os.path.join(Config.REPORTS_DIR, "verify-results-latest.json")
    with open(results_path, "w") as f:
        json.dump([asdict(r) for r in results], f, indent=2)
    print(f"\nRaw results: {results_path}")

    report_path = generate_verify_report(results, bounds)
    print(f"Report: {report_path}")
    if not args.no_open:
        open_report(report_path)

    return 0 if all_passed(results) else 1


if __name__ == "__main__":
    sys.exit(main())
