#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python mirrors.

The O(p^2) table builders dominate a full suite run; this script times each
hot kernel on both backends and reports the speedup.

    python3 benchmarks/bench_kernels.py [--prime 499] [--repeats 3]
"""

import argparse
import time

from franelcheck.kernels import _native, pure


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime", type=int, default=499)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    p = args.prime
    m2, m4 = p * p, p**4

    cases = [
        ("franel_table (mod p^2)", lambda k: k.franel_table(p, m2, p)),
        ("central_binom_table (mod p^2)", lambda k: k.central_binom_table(p, m2, p)),
        ("binom_shift_table (mod p^2)", lambda k: k.binom_shift_table(p, m2, m2 // 3, p)),
        ("fpoly_table x=3 (mod p^2)", lambda k: k.fpoly_table(p, m2, 3, p)),
        ("genfranel_table r=6 (mod p)", lambda k: k.genfranel_table(p, p, 6, p)),
        ("weighted_cube_table w=-8 (mod p^2)", lambda k: k.weighted_cube_table(p, m2, m2 - 8, p)),
        ("triangle_weighted_sums (mod p^4)", lambda k: k.triangle_weighted_sums(p, m4)),
    ]

    if _native is None:
        print("compiled kernels not built; timing the pure backend only")

    print(f"p = {p}, best of {args.repeats}")
    header = f"{'kernel':<36} {'pure':>10} {'native':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in cases:
        t_pure, expected = best_of(lambda: call(pure), args.repeats)
        if _native is not None:
            t_native, got = best_of(lambda: call(_native), args.repeats)
            assert got == expected, f"backend mismatch in {name}"
            print(f"{name:<36} {t_pure * 1e3:>8.2f}ms {t_native * 1e3:>8.2f}ms {t_pure / t_native:>7.1f}x")
        else:
            print(f"{name:<36} {t_pure * 1e3:>8.2f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
