"""Power sums ``S_n(a) = 1^n + 2^n + ... + a^n``.

Three evaluators that share no code path beyond integer arithmetic:

* :func:`power_sum_naive` sums exact powers directly and is the oracle.
* :func:`power_sum_table` / :func:`power_sum_pascal` run Pascal's
  recurrence, solving ``sum_{k<=n} C(n+1, k) S_k(a) = (a+1)^(n+1) - 1``
  for the top term.
* :func:`power_sum_mod` sums ``j^n mod m`` without building bignums.

``S_n(0)`` is the empty sum 0, and ``0^0 = 1`` so ``S_0(a) = a``.
"""

from __future__ import annotations

from dataclasses import dataclass

from powersums.arith import Modulus, Residue, _mod_pow, as_modulus, binomial_row, exact_div
from powersums.reports import Claim, CongruenceReport


@dataclass(frozen=True)
class PowerSumQuery:
    n: int
    a: int

    def __post_init__(self):
        if self.n < 0 or self.a < 0:
            raise ValueError(f"need n >= 0 and a >= 0, got n={self.n}, a={self.a}")


def _check(n: int, a: int) -> None:
    if n < 0 or a < 0:
        raise ValueError(f"need n >= 0 and a >= 0, got n={n}, a={a}")


def power_sum_naive(n: int, a: int) -> int:
    _check(n, a)
    return sum(j**n for j in range(1, a + 1))


def naive_table(n_max: int, a: int) -> list[int]:
    """``[S_0(a), ..., S_{n_max}(a)]`` by direct summation of exact powers."""
    _check(n_max, a)
    sums = [0] * (n_max + 1)
    for j in range(1, a + 1):
        jk = 1
        for k in range(n_max + 1):
            sums[k] += jk
            jk *= j
    return sums


def pascal_remainder(n: int, a: int, lower: list[int], row: list[int]) -> int:
    """``(a+1)^(n+1) - 1 - sum_{k<n} C(n+1, k) S_k(a)``, i.e. ``(n+1) S_n(a)``.

    ``lower`` holds ``S_0(a) .. S_{n-1}(a)``; ``row`` is row ``n+1`` of
    Pascal's triangle.
    """
    acc = (a + 1) ** (n + 1) - 1
    for k in range(n):
        acc -= row[k] * lower[k]
    return acc


def power_sum_table(n_max: int, a: int) -> list[int]:
    """``[S_0(a), ..., S_{n_max}(a)]`` by Pascal's recurrence.

    O(n_max^2) bignum operations regardless of ``a``. Raises
    :class:`~powersums.arith.NotDivisible` only if the recurrence state is
    corrupt.
    """
    _check(n_max, a)
    sums: list[int] = []
    row = [1, 1]
    for n in range(n_max + 1):
        sums.append(exact_div(pascal_remainder(n, a, sums, row), n + 1))
        row = [1, *(x + y for x, y in zip(row, row[1:])), 1]
    return sums


def power_sum_pascal(n: int, a: int) -> int:
    return power_sum_table(n, a)[-1]


def power_sum_mod(n: int, a: int, m: int | Modulus) -> Residue:
    _check(n, a)
    mod = as_modulus(m).m
    total = 0
    for j in range(1, a + 1):
        total += _mod_pow(j, n, mod)
    return Residue(total % mod, mod)


def evaluate(q: PowerSumQuery, method: str = "naive") -> int:
    if method == "naive":
        return power_sum_naive(q.n, q.a)
    if method == "pascal":
        return power_sum_pascal(q.n, q.a)
    raise ValueError(f"unknown exact method {method!r}")


def verify_pascal_identity(n: int, a: int) -> CongruenceReport:
    """Check Pascal's identity exactly at ``(n, a)``.

    The left side uses directly summed powers, never the recurrence.
    """
    _check(n, a)
    if a < 1:
        raise ValueError(f"Pascal's identity is stated for a >= 1, got a={a}")
    sums = naive_table(n, a)
    row = binomial_row(n + 1)
    lhs = sum(row[k] * sums[k] for k in range(n + 1))
    rhs = (a + 1) ** (n + 1) - 1
    return CongruenceReport(Claim.PASCAL_IDENTITY, lhs, None, rhs)
