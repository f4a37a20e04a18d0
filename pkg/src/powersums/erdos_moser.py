"""Desk-scale search for solutions of ``S_n(m-1) = m^n``.

Candidates are screened modulo a few small primes and survivors are
confirmed with an exact bignum comparison. The filter is sound: a pair
rejected modulo any prime cannot be a solution, so the primes only
change how much exact work is done.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from powersums.arith import NotPrime, _mod_pow, is_prime, mod_pow
from powersums.power_sums import power_sum_mod, power_sum_naive

DEFAULT_FILTER_PRIMES = (2, 3, 5, 7, 11, 13)


class EmSolution(NamedTuple):
    n: int
    m: int


@dataclass(frozen=True)
class EmSearchConfig:
    n_max: int
    m_max: int
    filter_primes: tuple[int, ...] = field(default=DEFAULT_FILTER_PRIMES)

    def __post_init__(self):
        if self.n_max < 1 or self.m_max < 1:
            raise ValueError("n_max and m_max must be >= 1")
        object.__setattr__(self, "filter_primes", tuple(self.filter_primes))
        for q in self.filter_primes:
            _require_prime(q)


def _require_prime(q: int) -> None:
    if not (isinstance(q, int) and 0 <= q < 1 << 64 and is_prime(q)):
        raise NotPrime(q)


def em_check(n: int, m: int) -> bool:
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    return power_sum_naive(n, m - 1) == m**n


def em_filter(n: int, m: int, primes=()) -> bool:
    """False means ``(n, m)`` is provably not a solution; True means not excluded."""
    for q in primes:
        _require_prime(q)
    for q in primes:
        if power_sum_mod(n, m - 1, q).value != mod_pow(m, n, q).value:
            return False
    return True


def prescreen(n: int, m_max: int, primes: tuple[int, ...]):
    """Yield each ``m`` in ``2..m_max`` with ``em_filter(n, m, primes)`` true.

    Keeps running residues of ``S_n(m-1)`` mod each prime, one term per
    step, instead of resumming O(m) terms per candidate.
    """
    running = [0] * len(primes)
    for m in range(2, m_max + 1):
        survives = True
        for i, q in enumerate(primes):
            running[i] = (running[i] + _mod_pow(m - 1, n, q)) % q
            if running[i] != _mod_pow(m, n, q):
                survives = False
        if survives:
            yield m


def _search_exponent(n: int, m_max: int, primes: tuple[int, ...]) -> list[EmSolution]:
    return [EmSolution(n, m) for m in prescreen(n, m_max, primes) if em_check(n, m)]


def em_search(cfg: EmSearchConfig, workers: int = 1) -> list[EmSolution]:
    """All solutions with ``1 <= n <= n_max`` and ``2 <= m <= m_max``, sorted.

    ``m = 1`` is skipped: ``S_n(0) = 0 != 1``. With ``workers > 1`` the
    exponents are spread over a process pool.
    """
    ns = range(1, cfg.n_max + 1)
    args = [(n, cfg.m_max, cfg.filter_primes) for n in ns]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_search_exponent, *zip(*args)))
    else:
        chunks = [_search_exponent(*a) for a in args]
    return sorted(s for chunk in chunks for s in chunk)
