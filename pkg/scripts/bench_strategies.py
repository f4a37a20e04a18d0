"""Time the naive and Pascal-recurrence evaluators over a grid of (n, a).

The naive sum costs O(a) bignum powers and the recurrence O(n^2) bignum
products, so the crossover moves with n. Results are asserted equal before
any timing is printed.

    python scripts/bench_strategies.py --n 10 50 200 --a 100 1000 10000
"""

import argparse
import time

from powersums import power_sum_naive, power_sum_pascal


def timed(fn, *args):
    t0 = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[10, 50, 200])
    ap.add_argument("--a", type=int, nargs="+", default=[100, 1000, 10000])
    args = ap.parse_args()

    print(f"{'n':>6} {'a':>8} {'naive_ms':>10} {'pascal_ms':>10} {'ratio':>8}")
    for n in args.n:
        for a in args.a:
            v1, t1 = timed(power_sum_naive, n, a)
            v2, t2 = timed(power_sum_pascal, n, a)
            assert v1 == v2, (n, a)
            print(f"{n:>6} {a:>8} {t1 * 1e3:>10.2f} {t2 * 1e3:>10.2f} {t1 / t2:>8.2f}")


if __name__ == "__main__":
    main()
