"""Benchmark the tableau-counting kernel backends against each other.

Usage: python benchmarks/bench_kernels.py [--max-n N]

Workloads mirror the hot paths of the test suite: exhaustive hook pairs
(the closed-formula cross-check) and general skew shapes.
"""

import argparse
import time

from sbc.kernels import backends
from sbc.partitions import Hook, contains, partitions_of


def hook_pair_sweep(fn, max_n: int) -> int:
    queries = 0
    for n in range(2, max_n + 1):
        for x in range(n):
            lam = Hook(n, x).parts
            for n1 in range(1, n):
                for x1 in range(n1):
                    for x2 in range(n - n1):
                        fn(lam, Hook(n1, x1).parts, Hook(n - n1, x2).parts, 0)
                        queries += 1
    return queries


def general_sweep(fn, max_n: int) -> int:
    queries = 0
    for n in range(2, max_n + 1):
        for lam in partitions_of(n):
            for m in range(1, n):
                for mu in partitions_of(m):
                    if not contains(lam, mu):
                        continue
                    for nu in partitions_of(n - m):
                        fn(lam, mu, nu, 0)
                        queries += 1
    return queries


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=18, dest="max_n")
    args = parser.parse_args()

    workloads = [
        ("hook pairs", hook_pair_sweep, args.max_n),
        ("general shapes", general_sweep, min(args.max_n, 12)),
    ]
    times: dict[str, dict[str, float]] = {}
    for wname, work, bound in workloads:
        times[wname] = {}
        for bname, fn in backends().items():
            start = time.perf_counter()
            queries = work(fn, bound)
            elapsed = time.perf_counter() - start
            times[wname][bname] = elapsed
            rate = queries / elapsed if elapsed else float("inf")
            print(
                f"{wname:<16} {bname:<8} n<={bound:<3} {queries:>8} queries "
                f"{elapsed:8.3f}s  ({rate:,.0f}/s)"
            )
        if len(times[wname]) == 2:
            speedup = times[wname]["python"] / times[wname]["cython"]
            print(f"{wname:<16} speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
