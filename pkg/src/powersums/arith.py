"""Exact and modular integer primitives.

Exact values are plain Python ints (arbitrary precision). Moduli are
restricted to machine width (< 2**64); residues are always canonical,
i.e. reduced into ``[0, modulus)``.
"""

from __future__ import annotations

from dataclasses import dataclass

MACHINE_LIMIT = 1 << 64

# Deterministic for every n < 3.3e24, which covers the full 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_CUTOFF = 10_000


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_div` when the remainder is nonzero."""


class NotPrime(ValueError):
    """Raised when an operation requiring a prime modulus gets a composite."""

    def __init__(self, p: int):
        super().__init__(f"modulus {p} is not prime")
        self.p = p


@dataclass(frozen=True)
class Modulus:
    m: int
    is_prime_flag: bool | None = None

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool):
            raise TypeError(f"modulus must be an int, got {type(self.m).__name__}")
        if not 1 <= self.m < MACHINE_LIMIT:
            raise ValueError(f"modulus must satisfy 1 <= m < 2**64, got {self.m}")
        if self.is_prime_flag and not is_prime(self.m):
            raise ValueError(f"modulus {self.m} flagged prime but is composite")

    @property
    def prime(self) -> bool:
        if self.is_prime_flag is not None:
            return self.is_prime_flag
        return is_prime(self.m)

    def __int__(self) -> int:
        return self.m


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"residue {self.value} not in [0, {self.modulus})")

    @classmethod
    def of(cls, x: int, modulus: int) -> Residue:
        return cls(x % modulus, modulus)

    def __int__(self) -> int:
        return self.value


def as_modulus(m: int | Modulus) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


def require_prime(p: int | Modulus) -> Modulus:
    """Coerce ``p`` to a :class:`Modulus` and raise :class:`NotPrime` unless prime."""
    if isinstance(p, int) and not isinstance(p, bool) and not 1 <= p < MACHINE_LIMIT:
        raise NotPrime(p)
    mod = as_modulus(p)
    if not is_prime(mod.m):
        raise NotPrime(mod.m)
    return Modulus(mod.m, True)


def _mod_pow(base: int, exp: int, m: int) -> int:
    result = 1 % m
    base %= m
    while exp:
        if exp & 1:
            result = result * base % m
        base = base * base % m
        exp >>= 1
    return result


def mod_pow(base: int, exp: int, m: int | Modulus) -> Residue:
    """``base**exp mod m`` by right-to-left square-and-multiply."""
    if base < 0 or exp < 0:
        raise ValueError("base and exp must be nonnegative")
    mod = as_modulus(m).m
    return Residue(_mod_pow(base, exp, mod), mod)


def binomial(m: int, k: int) -> int:
    """Binomial coefficient C(m, k); zero outside ``0 <= k <= m``.

    Multiplicative formula. Each partial product ``C(m, i)`` is an integer,
    so every division below is exact.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if k < 0 or k > m:
        return 0
    k = min(k, m - k)
    c = 1
    for i in range(1, k + 1):
        c = exact_div(c * (m - k + i), i)
    return c


def binomial_row(m: int) -> list[int]:
    """Row ``[C(m, 0), ..., C(m, m)]`` of Pascal's triangle by the additive rule."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    row = [1]
    for _ in range(m):
        row = [1, *(x + y for x, y in zip(row, row[1:])), 1]
    return row


def _trial_division(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_SMALL_PRIMES = tuple(q for q in range(2, 100) if _trial_division(q))


def is_prime(n: int) -> bool:
    """Exact primality for ``0 <= n < 2**64``.

    Trial division below 10^4, deterministic Miller-Rabin above.
    """
    if n < 0 or n >= MACHINE_LIMIT:
        raise ValueError(f"is_prime supports 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < _TRIAL_CUTOFF:
        return _trial_division(n)

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = _mod_pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(limit: int) -> list[int]:
    """All primes ``p <= limit``, in increasing order."""
    return [p for p in range(2, limit + 1) if is_prime(p)]


def exact_div(a: int, b: int) -> int:
    if b < 1:
        raise ValueError(f"divisor must be positive, got {b}")
    q, r = divmod(a, b)
    if r:
        raise NotDivisible(f"{b} does not divide {a} (remainder {r})")
    return q
