import random

import pytest
from hypothesis import given, strategies as st

from oracles import pascal_triangle, pow_by_repetition, sieve, trial_division
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
    require_prime,
)

TRIANGLE = pascal_triangle(50)


@pytest.mark.parametrize(
    "base, exp, m, expected",
    [(2, 4, 5, 1), (7, 0, 13, 1), (3, 100, 101, pow_by_repetition(3, 100, 101)), (5, 3, 1, 0)],
)
def test_mod_pow_examples(base, exp, m, expected):
    r = mod_pow(base, exp, m)
    assert r == Residue(expected, m)


def test_mod_pow_3_100_101_is_one():
    # oracle value, and Fermat once 101 is confirmed prime by trial division
    assert pow_by_repetition(3, 100, 101) == 1
    assert trial_division(101)
    assert mod_pow(3, 100, Modulus(101)).value == 1


@given(st.integers(0, 10**6), st.integers(0, 1000), st.integers(1, 10**4))
def test_mod_pow_matches_repetition(base, exp, m):
    assert mod_pow(base, exp, m).value == pow_by_repetition(base, exp, m)


@given(st.integers(0, 2**200), st.integers(0, 2**70), st.integers(1, 2**64 - 1))
def test_mod_pow_large_operands(base, exp, m):
    assert mod_pow(base, exp, m).value == pow(base, exp, m)


def test_mod_pow_rejects_negative():
    with pytest.raises(ValueError):
        mod_pow(-2, 3, 5)


@pytest.mark.parametrize("m, k, expected", [(14, 4, 1001), (14, 8, 3003), (14, 12, 91), (5, 0, 1), (6, 3, 20)])
def test_binomial_examples(m, k, expected):
    assert binomial(m, k) == expected


@pytest.mark.parametrize("m, k", [(5, -1), (5, 6), (0, 1)])
def test_binomial_outside_range(m, k):
    assert binomial(m, k) == 0


def test_binomial_row_examples():
    assert binomial_row(0) == [1]
    assert binomial_row(4) == [1, 4, 6, 4, 1]
    row = binomial_row(14)
    assert len(row) == 15
    assert (row[4], row[8], row[12]) == (1001, 3003, 91)


def test_six_choose_three_from_triangle():
    assert TRIANGLE[6][3] == 20


@pytest.mark.parametrize("m", range(51))
def test_two_binomial_algorithms_agree(m):
    row = binomial_row(m)
    assert row == TRIANGLE[m]
    assert row == [binomial(m, k) for k in range(m + 1)]


@given(st.integers(0, 400).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
def test_binomial_symmetry(mk):
    m, k = mk
    assert binomial(m, k) == binomial(m, m - k)


@pytest.mark.parametrize("m", range(31))
def test_row_sum_is_power_of_two(m):
    assert sum(binomial_row(m)) == 2**m


@pytest.mark.parametrize("n, expected", [(0, False), (1, False), (2, True), (91, False), (97, True), (999983, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_91_factors():
    assert 91 == 7 * 13 and not trial_division(91)
    assert trial_division(97)


def test_is_prime_agrees_with_sieve_below_one_million():
    flags = sieve(10**6)
    mismatches = [n for n in range(10**6) if is_prime(n) != bool(flags[n])]
    assert mismatches == []


@given(st.integers(0, 10**9))
def test_is_prime_agrees_with_trial_division(n):
    assert is_prime(n) == trial_division(n)


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**64 - 59, True),  # largest 64-bit prime
        (3825123056546413051, False),  # strong pseudoprime to bases 2..23
        (318665857834031151167461, None),  # beyond machine width
        (2**64 - 1, False),
        (4294967291 * 4294967279, False),
    ],
)
def test_is_prime_machine_width(n, expected):
    if expected is None:
        with pytest.raises(ValueError):
            is_prime(n)
    else:
        assert is_prime(n) is expected


def test_primes_upto():
    assert primes_upto(50) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert len(primes_upto(100)) == 25
    assert primes_upto(1) == []


@pytest.mark.parametrize("a, b, q", [(30, 3, 10), (63, 3, 21)])
def test_exact_div(a, b, q):
    assert exact_div(a, b) == q


def test_exact_div_not_divisible():
    with pytest.raises(NotDivisible):
        exact_div(10, 4)
    with pytest.raises(ValueError):
        exact_div(10, 0)


@given(st.integers(0, 2**300), st.integers(1, 2**100))
def test_exact_div_roundtrip(a, b):
    assert exact_div(a * b, b) == a


def test_residue_invariants():
    assert Residue.of(-1, 5) == Residue(4, 5)
    with pytest.raises(ValueError):
        Residue(5, 5)
    with pytest.raises(ValueError):
        Residue(0, 0)


def test_modulus_validation():
    assert Modulus(7).prime
    assert not Modulus(9).prime
    with pytest.raises(ValueError):
        Modulus(0)
    with pytest.raises(ValueError):
        Modulus(2**64)
    with pytest.raises(ValueError):
        Modulus(9, True)
    with pytest.raises(NotPrime):
        require_prime(1)
    with pytest.raises(NotPrime):
        require_prime(-7)
    assert require_prime(Modulus(13)).is_prime_flag is True


def test_concurrent_use_is_pure():
    from concurrent.futures import ThreadPoolExecutor

    rng = random.Random(7)
    jobs = [(rng.randrange(10**6), rng.randrange(500), rng.randrange(1, 10**4)) for _ in range(200)]
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(lambda t: mod_pow(*t).value, jobs))
    assert got == [pow(*t) for t in jobs]
