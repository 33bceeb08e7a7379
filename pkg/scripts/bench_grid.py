#!/usr/bin/env python3
"""Timing/quality grid over instance size and coverage cap.

Compares the two exact engines with the approximation on generated
instances.  Runtimes are wall-clock single runs; quality is the achieved
minimum coverage (exact engines always agree, the approximation may
trade some of it for speed).

Usage: python scripts/bench_grid.py [--sizes 1000,10000] [--caps 5,30] [--seed 1]
"""

import argparse
import time

from covprune import generate_instance, solve_exact, approx_prune


def run(args):
    sizes = [int(x) for x in args.sizes.split(",")]
    caps = [int(x) for x in args.caps.split(",")]
    print(f"{'n':>8} {'k':>4} {'method':<16} {'mincov':>7} {'maxcov':>7} "
          f"{'kept':>8} {'time_s':>8}")
    for n in sizes:
        for k in caps:
            s = generate_instance(n, args.span, args.seed)
            for method, solver in (
                    ("exact-generic", lambda: solve_exact(s, k, "generic")),
                    ("exact-tailored", lambda: solve_exact(s, k, "tailored")),
                    ("approx", lambda: approx_prune(s, k))):
                t0 = time.perf_counter()
                sol = solver()
                dt = time.perf_counter() - t0
                print(f"{n:>8} {k:>4} {method:<16} {sol.achieved_mincov:>7} "
                      f"{sol.achieved_maxcov:>7} {sol.num_kept:>8} {dt:>8.3f}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,10000,100000")
    parser.add_argument("--caps", default="5,30")
    parser.add_argument("--span", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=1)
    run(parser.parse_args())


if __name__ == "__main__":
    main()
