"""Elementary number theory around T^2 + T + 1 modulo primes.

Legendre symbols are computed with Euler's criterion, square roots with
Tonelli-Shanks, and factorizations with trial division.  Reciprocity is never
used on the computation path, so tests can check it as an identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .errors import BudgetExceeded, CompositeModulus, EvenOrCompositeModulus, ModulusTooLarge

MODULUS_LIMIT = 2**31
FACTOR_LEMMA_B_MAX = 10**6


def is_prime(n: int) -> bool:
    """Trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def check_prime(p: int, exc: type[Exception] = CompositeModulus) -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"modulus must be an int, got {type(p).__name__}")
    if p >= MODULUS_LIMIT:
        raise ModulusTooLarge(f"modulus {p} exceeds the supported bound 2^31")
    if not is_prime(p):
        raise exc(f"{p} is not prime")
    return p


def _check_odd_prime(p: int) -> int:
    check_prime(p, EvenOrCompositeModulus)
    if p == 2:
        raise EvenOrCompositeModulus("modulus must be an odd prime, got 2")
    return p


def legendre_symbol(a: int, p: int) -> int:
    """Return (a/p) in {-1, 0, 1} for an odd prime p, via a^((p-1)/2) mod p."""
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    ls = pow(a, (p - 1) // 2, p)
    return -1 if ls == p - 1 else 1


def sqrt_mod(a: int, p: int) -> int | None:
    """Square root of a modulo an odd prime p, or None for a nonresidue.

    Of the two roots s and p - s the smaller one is returned.
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        return None

    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
        return min(s, p - s)

    # p - 1 = q * 2^e with q odd
    q, e = p - 1, 0
    while q % 2 == 0:
        q //= 2
        e += 1

    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1

    m = e
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        # least i with t^(2^i) == 1
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


def phi3_roots_mod_p(p: int) -> list[int]:
    """Sorted residues b in [0, p) with b^2 + b + 1 == 0 (mod p)."""
    check_prime(p)
    if p == 2:
        return [b for b in range(2) if (b * b + b + 1) % 2 == 0]
    if p == 3:
        return [1]
    s = sqrt_mod(-3, p)
    if s is None:
        return []
    half = pow(2, -1, p)
    return sorted({(-1 + s) * half % p, (-1 - s) * half % p})


class SplitClass(enum.Enum):
    RAMIFIED = "Ramified"
    SPLITS = "Splits"
    INERT = "Inert"


def classify_prime(p: int) -> SplitClass:
    check_prime(p)
    if p == 3:
        return SplitClass.RAMIFIED
    return SplitClass.SPLITS if p % 3 == 1 else SplitClass.INERT


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, ascending primes."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            factors.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


@dataclass(frozen=True)
class FactorReport:
    b: int
    value: int
    factors: tuple[tuple[int, int], ...]
    all_congruent: bool


def factor_lemma_check(b: int) -> FactorReport:
    """Factor b^2 + b + 1 and record whether every prime factor is 0 or 1 mod 3."""
    if b < 1:
        raise ValueError(f"b must be positive, got {b}")
    if b > FACTOR_LEMMA_B_MAX:
        raise BudgetExceeded(f"b = {b} exceeds the trial-division budget {FACTOR_LEMMA_B_MAX}")
    value = b * b + b + 1
    factors = tuple(factorize(value))
    return FactorReport(b, value, factors, all(q % 3 in (0, 1) for q, _ in factors))


def primes_below(n: int) -> list[int]:
    if n < 3:
        return []
    sieve = bytearray([1]) * n
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n, i)))
    return [i for i in range(n) if sieve[i]]
