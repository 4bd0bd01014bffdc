"""Exact factored-integer arithmetic for character degrees."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from math import prod

# Deterministic for n < 3.3e24, which covers every prime used here.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactorError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def trial_factor(n: int) -> dict[int, int]:
    """Factor a small positive integer by trial division."""
    if n < 1:
        raise FactorError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True, order=True)
class FactoredInt:
    """Positive integer stored as sorted ``(prime, exponent)`` pairs."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise FactorError("factors must be sorted with distinct primes")
        for p, e in self.factors:
            if e < 1:
                raise FactorError(f"exponent of {p} must be positive")
            if not is_prime(p):
                raise FactorError(f"{p} is not prime")

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> FactoredInt:
        return cls(tuple(sorted((p, e) for p, e in mapping.items() if e)))

    @classmethod
    def from_primes(cls, primes: Iterable[int]) -> FactoredInt:
        counts: dict[int, int] = {}
        for p in primes:
            counts[p] = counts.get(p, 0) + 1
        return cls.of(counts)

    @classmethod
    def from_int(cls, n: int) -> FactoredInt:
        return cls.of(trial_factor(n))

    @property
    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    def __mul__(self, other: FactoredInt) -> FactoredInt:
        d = self.as_dict
        for p, e in other.factors:
            d[p] = d.get(p, 0) + e
        return FactoredInt.of(d)

    def __pow__(self, k: int) -> FactoredInt:
        return FactoredInt.of({p: e * k for p, e in self.factors})

    def divides(self, other: FactoredInt) -> bool:
        o = other.as_dict
        return all(o.get(p, 0) >= e for p, e in self.factors)

    def __truediv__(self, other: FactoredInt) -> FactoredInt:
        if not other.divides(self):
            raise FactorError(f"{other} does not divide {self}")
        d = self.as_dict
        for p, e in other.factors:
            d[p] -= e
        return FactoredInt.of(d)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


ONE = FactoredInt()


def prime_power(p: int, e: int) -> FactoredInt:
    return FactoredInt.of({p: e})
