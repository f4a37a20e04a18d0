"""Erdos-Moser search with filter statistics.

Reports how many candidates each prefix of the filter-prime list lets
through to the exact check, then runs the full search.

    python scripts/em_filter_stats.py --n-max 20 --m-max 5000
"""

import argparse
import time

from powersums.erdos_moser import DEFAULT_FILTER_PRIMES, EmSearchConfig, em_search, prescreen


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--m-max", type=int, default=5000)
    args = ap.parse_args()

    total = args.n_max * (args.m_max - 1)
    for k in range(len(DEFAULT_FILTER_PRIMES) + 1):
        primes = DEFAULT_FILTER_PRIMES[:k]
        survivors = sum(sum(1 for _ in prescreen(n, args.m_max, primes)) for n in range(1, args.n_max + 1))
        print(f"primes={list(primes)!s:<24} survivors={survivors:>8} / {total}")

    t0 = time.perf_counter()
    solutions = em_search(EmSearchConfig(args.n_max, args.m_max))
    print(f"solutions={solutions} in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
