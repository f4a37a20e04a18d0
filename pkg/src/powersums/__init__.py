"""Exact and modular power sums via Pascal's identity, congruence checkers,
and an Erdos-Moser search."""

from powersums.arith import (
    Modulus,
    NotDivisible,
    NotPrime,
    Residue,
    binomial,
    binomial_row,
    exact_div,
    is_prime,
    mod_pow,
    primes_upto,
)
from powersums.congruences import (
    DivisibleBase,
    fermat_check,
    hermite_bachmann_sum,
    hermite_bachmann_terms,
    hermite_bachmann_via_pascal,
    theorem1_residue,
    verify_hermite_bachmann,
    verify_theorem1,
)
from powersums.erdos_moser import EmSearchConfig, EmSolution, em_check, em_filter, em_search
from powersums.power_sums import (
    PowerSumQuery,
    power_sum_mod,
    power_sum_naive,
    power_sum_pascal,
    power_sum_table,
    verify_pascal_identity,
)
from powersums.reports import Claim, CongruenceReport

__all__ = [
    "Claim",
    "CongruenceReport",
    "DivisibleBase",
    "EmSearchConfig",
    "EmSolution",
    "Modulus",
    "NotDivisible",
    "NotPrime",
    "PowerSumQuery",
    "Residue",
    "binomial",
    "binomial_row",
    "em_check",
    "em_filter",
    "em_search",
    "exact_div",
    "fermat_check",
    "hermite_bachmann_sum",
    "hermite_bachmann_terms",
    "hermite_bachmann_via_pascal",
    "is_prime",
    "mod_pow",
    "power_sum_mod",
    "power_sum_naive",
    "power_sum_pascal",
    "power_sum_table",
    "primes_upto",
    "theorem1_residue",
    "verify_hermite_bachmann",
    "verify_pascal_identity",
    "verify_theorem1",
]
