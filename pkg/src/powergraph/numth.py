"""Small-integer arithmetic: factorization, prime powers, element-order shapes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Union

MAX_N = 2**31

Factorization = tuple[tuple[int, int], ...]


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs.

    >>> factorize(60)
    ((2, 2), (3, 1), (5, 1))
    >>> factorize(1)
    ()
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    if n > MAX_N:
        raise ValueError(f"{n} exceeds the supported bound 2**31")
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return tuple(pairs)


def primes_of(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def is_prime_power(n: int) -> bool:
    """True for 1 and for p**k; 1 counts because a trivial intersection
    cannot hold two elements of distinct prime orders."""
    return len(factorize(n)) <= 1


def p_part(n: int, p: int) -> int:
    k = 1
    while n % p == 0:
        n //= p
        k *= p
    return k


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class PrimePower:
    """``p**m``; the integer 1 is ``PrimePower(1, 0)``."""

    p: int
    m: int


@dataclass(frozen=True)
class PrimePowerTimesPrime:
    p: int
    m: int
    q: int


@dataclass(frozen=True)
class ThreeDistinctPrimes:
    p: int
    q: int
    r: int


@dataclass(frozen=True)
class Nonconforming:
    factorization: Factorization


ElementOrderForm = Union[PrimePower, PrimePowerTimesPrime, ThreeDistinctPrimes, Nonconforming]


def order_form(n: int) -> ElementOrderForm:
    """Classify ``n`` as p^m, p^m*q, p*q*r, or none of these.

    For p^m*q with m >= 2 the squared prime is ``p``; when both exponents
    are 1 the smaller prime is ``p``.
    """
    f = factorize(n)
    if not f:
        return PrimePower(1, 0)
    if len(f) == 1:
        return PrimePower(*f[0])
    exps = [e for _, e in f]
    if len(f) == 2 and min(exps) == 1:
        (p1, e1), (p2, e2) = f
        if e1 >= e2:
            return PrimePowerTimesPrime(p1, e1, p2)
        return PrimePowerTimesPrime(p2, e2, p1)
    if len(f) == 3 and exps == [1, 1, 1]:
        return ThreeDistinctPrimes(*(p for p, _ in f))
    return Nonconforming(f)
