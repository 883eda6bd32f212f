#!/usr/bin/env python3
"""Compare the compiled and pure-Python multiplication kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--max-sum 12]
"""
import argparse
import time

from hyperlines import chern
from hyperlines.degeneration import report
from hyperlines.exactpoly import kernels


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def raw_products(max_sum):
    # realistic operands: pairs of top Chern classes, memoized outside the timer
    pairs = [
        (chern.chern_sym_power(k).top.terms, chern.difference_class(s, k, s - k)[s - k].terms)
        for s in range(2, max_sum + 1)
        for k in range(1, s)
    ]

    def run():
        for x, y in pairs:
            kernels.mul_terms(x, y)

    return run


def thm33_sweep(max_sum):
    def run():
        chern.clear_caches()
        for s in range(2, max_sum + 1):
            for k in range(1, s):
                assert chern.verify_theorem_3_3(k, s - k)

    return run


def report_grid():
    def run():
        chern.clear_caches()
        for n in range(2, 8):
            for d in range(2, 2 * n - 2):
                for k in range(1, d):
                    assert report(n, d, k).sum_matches

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--max-sum", type=int, default=12)
    args = parser.parse_args()

    workloads = {
        "raw mul_terms": raw_products(args.max_sum),
        f"Theorem 3.3 sweep k+l<={args.max_sum}": thm33_sweep(args.max_sum),
        "report grid n<=7": report_grid(),
    }
    backends = sorted(kernels.AVAILABLE)
    if "cython" not in backends:
        print("compiled kernel not built; only the pure-Python backend is available")
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in workloads.items():
        timings = {}
        for b in backends:
            with kernels.using_backend(b):
                timings[b] = best_of(args.repeat, fn)
        row = f"{name:<28}" + "".join(f"{timings[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{timings['python'] / timings['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
