#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled ones.

Run from a checkout with the package installed:

    python3 benchmarks/bench_backends.py [--repeat 3] [--full]

Each workload is run ``--repeat`` times per backend and the best time is
kept.  --full adds a degree-7 convolution, which is slow in pure Python.
"""

import argparse
import itertools
import sys
import time

from descents import _kernels_py as pure

try:
    from descents import _kernels as compiled
except ImportError:
    compiled = None


def full_group_items(n):
    return [(p, 1) for p in itertools.permutations(range(1, n + 1))]


def workloads(full):
    six = full_group_items(6)
    ones8 = (1,) * 8
    jobs = [
        ("convolve n=6 (720x720 terms)",
         lambda k: k.convolve(6, six, six)),
        ("enumerate_tables 8x8, margins all 1",
         lambda k: k.enumerate_tables(ones8, ones8)),
        ("reading_word_counts 8x8, margins all 1",
         lambda k: k.reading_word_counts(ones8, ones8, 8)),
        ("multinomial sums, all pairs n=7",
         lambda k: [k.sum_reading_multinomials(a, b, 7)
                    for a in _comps(7) for b in _comps(7)]),
    ]
    if full:
        seven = full_group_items(7)
        jobs.insert(1, ("convolve n=7 (5040x5040 terms)",
                        lambda k: k.convolve(7, seven, seven)))
    return jobs


def _comps(n):
    out = []
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def best_time(job, kernel, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        job(kernel)
        dt = time.perf_counter() - t0
        best = dt if best is None or dt < best else best
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--full", action="store_true",
                    help="include the degree-7 convolution")
    args = ap.parse_args(argv)

    if compiled is None:
        print("compiled kernels not available; showing pure timings only",
              file=sys.stderr)

    name_w = max(len(name) for name, _ in workloads(args.full))
    header = f"{'workload':<{name_w}}  {'pure':>9}  {'compiled':>9}  speedup"
    print(header)
    print("-" * len(header))
    for name, job in workloads(args.full):
        t_pure = best_time(job, pure, args.repeat)
        if compiled is None:
            print(f"{name:<{name_w}}  {t_pure:>8.4f}s  {'-':>9}")
            continue
        t_comp = best_time(job, compiled, args.repeat)
        ratio = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{name:<{name_w}}  {t_pure:>8.4f}s  {t_comp:>8.4f}s  "
              f"{ratio:>6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
