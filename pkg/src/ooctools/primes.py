"""Small number-theory helpers for cyclotomic constructions."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def multiplicative_order(g: int, n: int) -> int:
    g %= n
    if g == 0:
        raise ValueError(f"0 has no multiplicative order modulo {n}")
    k, x = 1, g
    while x != 1:
        x = x * g % n
        k += 1
        if k > n:
            raise ValueError(f"{g} is not a unit modulo {n}")
    return k
