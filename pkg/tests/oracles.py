"""Slow reference implementations that share no code with the package."""


def pow_by_repetition(base, exp, m):
    r = 1 % m
    for _ in range(exp):
        r = r * base % m
    return r


def pascal_triangle(rows):
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return tri


def sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return flags


def trial_division(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def power_sum_loop(n, a):
    total = 0
    j = 1
    while j <= a:
        term = 1
        for _ in range(n):
            term *= j
        total += term
        j += 1
    return total
