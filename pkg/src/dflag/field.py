"""Arithmetic in the prime field F_q. Elements are int residues in [0, q)."""

from __future__ import annotations

from .errors import ConfigError


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Residue arithmetic mod a prime q with a precomputed inverse table.

    The table makes pivot normalization during matrix reduction a plain
    list lookup. Instances are stateless after construction and safe to
    share between threads.
    """

    __slots__ = ("q", "inv")

    def __init__(self, q: int = 2):
        if not is_prime(q):
            raise ConfigError(f"modulus {q} is not prime")
        self.q = q
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = pow(a, -1, q)

    def element(self, x: int) -> int:
        return x % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inverse(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv[a]

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and self.q == other.q

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"
