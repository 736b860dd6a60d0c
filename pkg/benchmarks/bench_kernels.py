#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--limit N] [--repeat R]

Times the three kernel entry points on identical inputs and checks that
both lanes return identical bytes/lists while it is at it.
"""

import argparse
import sys
import time
from math import isqrt
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from primedelta import _pure  # noqa: E402
from primedelta.primes import _small_primes, sieve_primes  # noqa: E402

try:
    from primedelta import _kernels
except ImportError:
    _kernels = None


def best_of(repeat, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=10**7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    lanes = [_pure] if _kernels is None else [_pure, _kernels]
    if _kernels is None:
        print("compiled kernels not built; timing the pure lane only", file=sys.stderr)

    limit = args.limit
    padded = ((limit >> 3) + 1) << 3
    base = _small_primes(isqrt(padded - 1))
    table = sieve_primes(limit)

    workloads = [
        ("sieve_segment [0, %d)" % padded, "sieve_segment", (0, padded, base)),
        ("extract_primes to %d" % limit, "extract_primes", (table.bits, 0, limit)),
        ("pair_scan d=2 to %d" % limit, "pair_scan", (table.bits, 2, limit, 1000)),
    ]

    print(f"{'workload':<34}{'pure':>12}{'compiled':>12}{'speedup':>10}")
    for label, name, call_args in workloads:
        timings = {}
        results = {}
        for lane in lanes:
            timings[lane.BACKEND], results[lane.BACKEND] = best_of(
                args.repeat, getattr(lane, name), *call_args
            )
        if len(lanes) == 2:
            a, b = results["pure"], results["compiled"]
            same = a == b if name == "sieve_segment" else (a[0], list(a[1])) == (b[0], list(b[1])) if name == "pair_scan" else list(a) == list(b)
            if not same:
                raise SystemExit(f"lane mismatch on {label}")
            speedup = timings["pure"] / timings["compiled"]
            print(
                f"{label:<34}{timings['pure']:>10.3f}s{timings['compiled']:>11.3f}s"
                f"{speedup:>9.1f}x"
            )
        else:
            print(f"{label:<34}{timings['pure']:>10.3f}s{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
