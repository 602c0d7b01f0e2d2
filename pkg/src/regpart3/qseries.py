"""Truncated q-series: l-regular partition counts and eta-power expansions.

Everything here is a dense coefficient vector over exact integers or Z/MZ.
The generating function of l-regular partition counts is

    sum_n b_l(n) q^n  =  prod_m (1 - q^{lm}) / (1 - q^m),

and both products expand sparsely by the pentagonal number theorem

    prod_m (1 - q^m)  =  sum_k (-1)^k q^{k(3k-1)/2}   (k over all integers),

which is what makes the series engine O(N * sqrt(N)) instead of quadratic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_TRUNCATION = 5_000_000  # memory guard for dense coefficient vectors


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of a formal power series up to degree N (len == N+1).

    modulus None means exact integer coefficients; otherwise every entry
    lies in [0, modulus).
    """

    coeffs: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _check_bounds(n_max: int, modulus: int | None) -> None:
    if n_max < 0:
        raise ValueError(f"truncation bound must be >= 0, got {n_max}")
    if n_max > MAX_TRUNCATION:
        raise ValueError(f"truncation bound {n_max} exceeds budget {MAX_TRUNCATION}")
    if modulus is not None and modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")


def pentagonal_terms(n_max: int) -> list[tuple[int, int]]:
    """Sparse expansion of prod(1-q^m): (exponent, +-1) pairs with exponent <= n_max.

    Exponents are the generalized pentagonal numbers k(3k-1)/2, k = ..., -1, 0, 1, ...;
    the sign is (-1)^k.  Returned sorted by exponent, starting with (0, 1).
    """
    terms = [(0, 1)]
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n_max:
            break
        sign = -1 if k % 2 else 1
        terms.append((g1, sign))
        g2 = k * (3 * k + 1) // 2
        if g2 <= n_max:
            terms.append((g2, sign))
        k += 1
    return terms


def regular_partition_series(l: int, n_max: int, modulus: int | None = None) -> TruncatedSeries:
    """Series of b_l(n), the number of partitions of n with no part divisible by l.

    Computed by one sparse division: coefficients satisfy
    b[n] = e_l[n] - sum_{g>0} sign(g) * b[n-g], where e_l is the sparse
    expansion of prod(1-q^{lm}) and g runs over positive pentagonal exponents.
    """
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    _check_bounds(n_max, modulus)

    # prod(1 - q^{lm}) as a sparse dict of degree <= n_max
    numer = {l * g: s for g, s in pentagonal_terms(n_max // l)}
    denom = pentagonal_terms(n_max)[1:]  # skip the constant term 1

    b = [0] * (n_max + 1)
    b[0] = 1
    if modulus is None:
        for n in range(1, n_max + 1):
            acc = numer.get(n, 0)
            for g, s in denom:
                if g > n:
                    break
                if s > 0:
                    acc -= b[n - g]
                else:
                    acc += b[n - g]
            b[n] = acc
    else:
        for n in range(1, n_max + 1):
            acc = numer.get(n, 0)
            for g, s in denom:
                if g > n:
                    break
                if s > 0:
                    acc -= b[n - g]
                else:
                    acc += b[n - g]
            b[n] = acc % modulus
        b[0] = 1 % modulus
    return TruncatedSeries(tuple(b), modulus)


def _mul_trunc(a: list[int], b: list[int], n_max: int, modulus: int | None) -> list[int]:
    """Truncated product of dense coefficient lists, skipping zero coefficients."""
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > n_max:
            continue
        top = min(len(b) - 1, n_max - i)
        for j in range(top + 1):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    if modulus is not None:
        out = [c % modulus for c in out]
    return out


def euler_product_power(power: int, scale: int, n_max: int, modulus: int | None = None) -> TruncatedSeries:
    """Expansion of prod_{m>=1} (1 - q^{scale*m})^power up to degree n_max.

    The base product is the sparse pentagonal expansion in Q = q^scale;
    the power is taken by binary exponentiation with truncated products.
    """
    if power < 1:
        raise ValueError(f"power must be >= 1, got {power}")
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    _check_bounds(n_max, modulus)

    inner_deg = n_max // scale
    base = [0] * (inner_deg + 1)
    for g, s in pentagonal_terms(inner_deg):
        base[g] = s if modulus is None else s % modulus

    result = [1]
    sq = base
    e = power
    while True:
        if e & 1:
            result = _mul_trunc(result, sq, inner_deg, modulus)
        e >>= 1
        if not e:
            break
        sq = _mul_trunc(sq, sq, inner_deg, modulus)

    out = [0] * (n_max + 1)
    out[:: scale] = result[: n_max // scale + 1]
    return TruncatedSeries(tuple(out), modulus)


def eta_power_qseries(which: str, n_max: int, modulus: int | None = None) -> TruncatedSeries:
    """Exact q-expansions of the two eta powers used by the divisibility criteria.

    "eta8_3z"   -> q    * prod(1 - q^{3m})^8     (coefficients of eta(3z)^8)
    "eta26_12z" -> q^13 * prod(1 - q^{12m})^26   (coefficients of eta(12z)^26)
    """
    if which == "eta8_3z":
        shift, power, scale = 1, 8, 3
    elif which == "eta26_12z":
        shift, power, scale = 13, 26, 12
    else:
        raise ValueError(f"unknown eta power {which!r}")
    if n_max < shift:
        raise ValueError(f"{which} needs truncation bound >= {shift}, got {n_max}")
    inner = euler_product_power(power, scale, n_max - shift, modulus)
    coeffs = (0,) * shift + inner.coeffs
    return TruncatedSeries(coeffs, modulus)
