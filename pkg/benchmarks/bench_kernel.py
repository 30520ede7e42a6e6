"""Benchmark: compiled chain-scan kernel vs. the pure-Python twin.

Both backends walk every chain [b1..bl] with l <= max_len and entries up to
max_entry, evaluating the continued fraction, the smoothability recognition,
the negative-definiteness minors and the round-trip expansion per chain.

Usage:
    python3 benchmarks/bench_kernel.py            # quick sweep
    python3 benchmarks/bench_kernel.py --full     # adds the (8, 12) bounds
                                                  # (compiled backend only)
"""

import argparse
import time

from qgsurf import kernel
from qgsurf._kernel_py import scan_chains as python_scan


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="also run the (8, 12) acceptance bounds on the "
                             "compiled backend")
    args = parser.parse_args()

    print(f"selected backend: {kernel.BACKEND}")
    header = f"{'bounds':>10} {'chains':>12} {'accepted':>9} {'compiled':>10} {'python':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for bounds in [(4, 6), (5, 8), (6, 10)]:
        c_time, c_out = timed(kernel.scan_chains, *bounds)
        p_time, p_out = timed(python_scan, *bounds)
        assert c_out == p_out, "backends disagree"
        total, accepted, _, _ = c_out
        speedup = p_time / c_time if c_time > 0 else float("inf")
        print(f"{str(bounds):>10} {total:>12} {len(accepted):>9} "
              f"{c_time:>9.3f}s {p_time:>9.3f}s {speedup:>7.1f}x")

    if args.full:
        bounds = (8, 12)
        c_time, (total, accepted, negdef, rt) = timed(kernel.scan_chains, *bounds)
        print(f"{str(bounds):>10} {total:>12} {len(accepted):>9} "
              f"{c_time:>9.3f}s {'-':>10} {'-':>8}")
        assert negdef == 0 and rt == 0


if __name__ == "__main__":
    main()
