#!/usr/bin/env python3
"""Sweep the classification over a grid and print one verify line per point.

Usage: classification_sweep.py [--census-limit N]

Covers the documented ranges (t=3 to n=20, t=4 to n=25, t=5..7 to n=30) and
cross-checks against the labelled-graph census wherever n is small enough.
A nonzero exit means some point failed.
"""

import argparse
import sys
import time

from lambdacol import verify_classification

RANGES = [(3, 20), (4, 25), (5, 30), (6, 30), (7, 30)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--census-limit", type=int, default=6,
                    help="largest n to cross-check against the graph census")
    args = ap.parse_args()
    started = time.perf_counter()
    failures = 0
    for t, hi in RANGES:
        for n in range(t + 1, hi + 1):
            rep = verify_classification(n, t, census_limit=args.census_limit)
            print(rep.line())
            if not rep.passed:
                failures += 1
    elapsed = time.perf_counter() - started
    print(f"# done in {elapsed:.1f}s, {failures} failing points",
          file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
