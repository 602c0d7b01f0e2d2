"""Deterministic factorization of 64-bit integers.

The shifted indices 3n+1 and 12n+13 handled elsewhere in this package are
at most 64 bits, so a fixed Miller-Rabin witness set plus Brent-cycle
Pollard rho is enough for fully deterministic behaviour.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

_TRIAL_BOUND = 1000

# Witnesses proving primality for every n < 3.3 * 10^24 (covers 64 bits).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return [i for i, f in enumerate(flags) if f]

SMALL_PRIMES = _sieve(_TRIAL_BOUND)
_SMALL_PRIME_SET = set(SMALL_PRIMES)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n >= 0 (exact up to 64 bits and beyond)."""
    if n < _TRIAL_BOUND + 1:
        return n in _SMALL_PRIME_SET
    for p in _MR_WITNESSES:
        if n % p == 0:
            return False
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of composite n (n odd, not a prime power of a small prime)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(0xB5E7 ^ n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factored:
    """Complete prime factorization of m: factors sorted by prime, exponents >= 1."""

    m: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


def factorize(m: int) -> Factored:
    """Fully factor a positive integer; factorize(1) has an empty factor list."""
    if m < 1:
        raise ValueError(f"factorize requires m >= 1, got {m}")
    counts: dict[int, int] = {}
    rem = m
    for p in SMALL_PRIMES:
        if p * p > rem:
            break
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    stack = [rem] if rem > 1 else []
    while stack:
        v = stack.pop()
        # After trial division, anything below the bound squared is prime.
        if v <= _TRIAL_BOUND * _TRIAL_BOUND or is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        d = _pollard_brent(v)
        stack.append(d)
        stack.append(v // d)
    return Factored(m, tuple(sorted(counts.items())))


def valuation(m: int, p: int) -> int:
    """Exact power of p dividing m (ord_p), for m >= 1 and p >= 2."""
    if p < 2:
        raise ValueError(f"valuation requires p >= 2, got {p}")
    if m < 1:
        raise ValueError(f"valuation requires m >= 1, got {m}")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e
