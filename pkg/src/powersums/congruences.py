"""Power-sum congruence, Fermat's little theorem and the Hermite-Bachmann
binomial-sum congruence, each as a fast evaluator plus a checker that
compares it with brute force.

Every entry point takes a prime modulus and raises
:class:`~powersums.arith.NotPrime` otherwise. ``-1 mod p`` is always
reported as ``p - 1``.
"""

from __future__ import annotations

from powersums.arith import Modulus, Residue, binomial, binomial_row, mod_pow, require_prime
from powersums.power_sums import power_sum_mod
from powersums.reports import Claim, CongruenceReport


def _positive(name: str, x: int) -> None:
    if x < 1:
        raise ValueError(f"{name} must be >= 1, got {x}")


def theorem1_residue(n: int, p: int | Modulus) -> Residue:
    """``S_n(p) mod p`` in O(1): ``p - 1`` if ``(p-1) | n``, else 0."""
    _positive("n", n)
    q = require_prime(p).m
    return Residue(q - 1 if n % (q - 1) == 0 else 0, q)


def verify_theorem1(n: int, p: int | Modulus) -> CongruenceReport:
    mod = require_prime(p)
    expected = theorem1_residue(n, mod)
    return CongruenceReport(Claim.THEOREM1, power_sum_mod(n, mod.m, mod), mod, expected)


class DivisibleBase(ValueError):
    """Fermat's little theorem needs a base coprime to p."""


def fermat_check(a: int, p: int | Modulus) -> CongruenceReport:
    _positive("a", a)
    mod = require_prime(p)
    if a % mod.m == 0:
        raise DivisibleBase(f"{mod.m} divides {a}")
    return CongruenceReport(Claim.FERMAT, mod_pow(a, mod.m - 1, mod), mod, Residue(1, mod.m))


def hermite_bachmann_terms(m: int, p: int | Modulus) -> list[tuple[int, int]]:
    """``(k, C(m, k))`` for ``0 < k < m`` with ``(p-1) | k``."""
    _positive("m", m)
    step = require_prime(p).m - 1
    return [(k, binomial(m, k)) for k in range(step, m, step)]


def hermite_bachmann_sum(m: int, p: int | Modulus) -> int:
    return sum(c for _, c in hermite_bachmann_terms(m, p))


def verify_hermite_bachmann(m: int, p: int | Modulus) -> CongruenceReport:
    mod = require_prime(p)
    return CongruenceReport(
        Claim.HERMITE_BACHMANN, hermite_bachmann_sum(m, mod), mod, Residue(0, mod.m)
    )


def hermite_bachmann_via_pascal(m: int, p: int | Modulus) -> CongruenceReport:
    """Derive the binomial-sum residue from Pascal's identity at ``n = m-1, a = p``.

    Reducing the identity mod p and substituting ``S_k(p) = -1`` on the
    terms with ``(p-1) | k`` leaves ``-HB(m, p)`` equal to the right side
    minus every other term. Those other terms use brute-force ``S_k(p) mod p``
    so the result is an independent derivation, not a restatement.
    """
    _positive("m", m)
    mod = require_prime(p)
    q = mod.m
    row = binomial_row(m)
    rhs = (mod_pow(q + 1, m, mod).value - 1) % q
    rest = 0
    for k in range(m):
        if k >= 1 and k % (q - 1) == 0:
            continue
        rest += row[k] * power_sum_mod(k, q, mod).value
    derived = Residue.of(-(rhs - rest), q)
    return CongruenceReport(Claim.HERMITE_BACHMANN, derived, mod, Residue(0, q))
