"""Decision procedures for 3 | b_9(n) and 3 | b_27(n).

The b_9 criterion reads divisibility off the factorization of 3n+1.

For b_27 there are two evaluators over the factorization of 12n+13:

  * criterion_b27_congruence - the authoritative procedure: divisibility
    holds iff the two weight-13 coefficient-product pairs agree mod 3^5,
      prod t_{e+} + prod t_{e-}  =  prod t_{g+} + prod t_{g-}  (mod 3^5),
    with every factor computed by the recurrence-backed residue engine.

  * criterion_b27_literal - the published six-bullet criterion evaluated
    exactly as printed, bullet by bullet, short-circuiting on the first
    hit.  It exists to audit the printed statement: its bullets 1-4 are
    sound, while the bullet-5/6 residual congruences are known to disagree
    with ground truth on some inputs; a sweep harness collects every
    disagreement with witnesses (see cli.sweep).

Verdicts carry enough witness data to recompute the decision offline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .eigenform import MOD, Mod243, prime_reps, product_mod243
from .factor import factorize
from .quadint import EisenSquaresRep, TwoSquaresRep

MAX_SHIFTED = 2**64 - 1
_MOD4 = 3**4


@dataclass(frozen=True)
class PrimeClassification:
    """One prime power p^alpha of the shifted index, with its residue class
    and whatever normalized representations that class calls for."""

    p: int
    alpha: int
    cls: int  # p mod 3 (b9 mode) or p mod 12 (b27 mode)
    xy: TwoSquaresRep | None = None
    zw: EisenSquaresRep | None = None
    xy_val3: int | None = None  # ord_3(x + y), set only for p = 5 (mod 12)

    def as_dict(self) -> dict:
        d = {"p": self.p, "alpha": self.alpha, "cls": self.cls}
        if self.xy is not None:
            d["x"], d["y"] = self.xy.x, self.xy.y
        if self.zw is not None:
            d["z"], d["w"] = self.zw.z, self.zw.w
        if self.xy_val3 is not None:
            d["v3_x_plus_y"] = self.xy_val3
        return d


@dataclass(frozen=True)
class Verdict:
    divisible: bool
    rule: str
    witnesses: dict = field(default_factory=dict)


def _val3(n: int) -> int:
    n = abs(n)
    e = 0
    while n and n % 3 == 0:
        n //= 3
        e += 1
    return e


def classify(shifted_index: int, mode: str) -> list[PrimeClassification]:
    """Classify every prime divisor of the shifted index.

    mode "b9":  index must be 1 (mod 3); classes are p mod 3.
    mode "b27": index must be coprime to 6; classes are p mod 12, with
    two-squares data for p = 1 (mod 4) and z^2+3w^2 data for p = 1 (mod 3).
    """
    if shifted_index < 1:
        raise ValueError(f"shifted index must be positive, got {shifted_index}")
    if mode == "b9":
        if shifted_index % 3 != 1:
            raise ValueError(f"{shifted_index} is not 1 mod 3")
    elif mode == "b27":
        if math.gcd(shifted_index, 6) != 1:
            raise ValueError(f"{shifted_index} is not coprime to 6")
    else:
        raise ValueError(f"unknown mode {mode!r}")

    out = []
    for p, alpha in factorize(shifted_index):
        if mode == "b9":
            out.append(PrimeClassification(p, alpha, p % 3))
            continue
        reps = prime_reps(p)
        v3 = None
        if p % 12 == 5:
            v3 = _val3(reps["xy"].x + reps["xy"].y)
        out.append(PrimeClassification(p, alpha, p % 12, reps["xy"], reps["zw"], v3))
    return out


# ---------------------------------------------------------------------------
# b_9
# ---------------------------------------------------------------------------

def criterion_b9(n: int) -> Verdict:
    """3 | b_9(n) iff 3n+1 has a prime p = 2 (mod 3) to an odd power, or a
    prime p = 1 (mod 3) to a power that is 2 mod 3."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m = 3 * n + 1
    if m > MAX_SHIFTED:
        raise OverflowError(f"3n+1 = {m} exceeds 64 bits")
    cls = classify(m, "b9")
    witnesses = {"n": n, "shifted": m, "classification": [c.as_dict() for c in cls]}
    inert_odd = [c.p for c in cls if c.cls == 2 and c.alpha % 2 == 1]
    if inert_odd:
        witnesses["primes"] = inert_odd
        return Verdict(True, "b9.inert_odd_power", witnesses)
    split_ord2 = [c.p for c in cls if c.cls == 1 and c.alpha % 3 == 2]
    if split_ord2:
        witnesses["primes"] = split_ord2
        return Verdict(True, "b9.split_power_2_mod_3", witnesses)
    return Verdict(False, "b9.none", witnesses)


# ---------------------------------------------------------------------------
# b_27: authoritative congruence mode
# ---------------------------------------------------------------------------

def criterion_b27_congruence(n: int) -> Verdict:
    """3 | b_27(n) iff the eisen-pair and gauss-pair coefficient products at
    12n+13 have equal sums mod 3^5."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m = 12 * n + 13
    if m > MAX_SHIFTED:
        raise OverflowError(f"12n+13 = {m} exceeds 64 bits")
    cls = classify(m, "b27")
    factors = [(c.p, c.alpha) for c in cls]
    prods = {form: product_mod243(form, factors, m) for form in ("eisen+", "eisen-", "gauss+", "gauss-")}
    lhs = prods["eisen+"] + prods["eisen-"]
    rhs = prods["gauss+"] + prods["gauss-"]
    # the sqrt(-3) parts of the pair sum always cancel
    assert lhs.is_rational and rhs.is_rational, (n, lhs, rhs)
    divisible = lhs == rhs
    witnesses = {
        "n": n,
        "shifted": m,
        "classification": [c.as_dict() for c in cls],
        "products_mod243": {f: [v.re, v.rt3] for f, v in prods.items()},
        "pair_sums_mod243": [lhs.re, rhs.re],
    }
    rule = "congruence.equal" if divisible else "congruence.unequal"
    return Verdict(divisible, rule, witnesses)


# ---------------------------------------------------------------------------
# b_27: literal bullet list
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CorrectionData:
    """The correction index k and inverse data for the 5 (mod 12) part.

    Over the s primes p = 5 (mod 12) with even exponent and 3 || (x+y):
      k = (-1)^(s+1) * prod_j (-1)^(alpha_j/2 - 1) p_j^(6 alpha_j - 12)
                     * sum_j (alpha_j (alpha_j+2)/8) prod_{i != j} p_i^12,
    reduced mod 3.  E is prod (-1)^(alpha/2) p^(6 alpha) over all primes
    p = 5 (mod 12), a unit mod 3^5; d = epsilon * E^{-1} mod 3^5.
    """

    s: int
    k_mod3: int
    epsilon: int
    e_mod243: int
    d_mod243: int


def five_correction(classification: list[PrimeClassification]) -> CorrectionData:
    """CorrectionData for a classification with no odd exponent at 5 (mod 12)."""
    fives = [c for c in classification if c.cls == 5]
    if any(c.alpha % 2 for c in fives):
        raise ValueError("five_correction requires every 5 (mod 12) exponent even")
    marked = [c for c in fives if c.xy_val3 == 1]
    s = len(marked)
    if s == 0:
        k = 0
    else:
        sign = (-1) ** (s + 1)
        prod_part = 1
        for c in marked:
            half = c.alpha // 2
            prod_part *= (-1) ** (half - 1) * pow(c.p, 6 * c.alpha - 12, 3)
        total = 0
        for j, cj in enumerate(marked):
            term = cj.alpha * (cj.alpha + 2) // 8
            for i, ci in enumerate(marked):
                if i != j:
                    term *= pow(ci.p, 12, 3)
            total += term
        k = sign * prod_part * total % 3
    e = 1
    for c in fives:
        v = pow(c.p, 6 * c.alpha, MOD)
        if (c.alpha // 2) % 2:
            v = -v
        e = e * v % MOD
    epsilon = k % 3
    d = epsilon * pow(e, -1, MOD) % MOD if epsilon else 0
    return CorrectionData(s, k % 3, epsilon, e, d)


@dataclass(frozen=True)
class ExponentBlock:
    """Aggregates over the primes p = 1 (mod 12) sharing one exponent alpha:
    r of them, the x-product power A = (prod x)^(12 alpha) and the
    y^2-weighted term B = (prod x)^(12 alpha - 2) sum_j y_j^2 prod_{i!=j} x_i^2,
    both mod 3^5 (B is always 0 mod 9 since each y is divisible by 3)."""

    alpha: int
    r: int
    a_mod243: int
    b_mod243: int


def exponent_blocks(classification: list[PrimeClassification]) -> list[ExponentBlock]:
    """One ExponentBlock per distinct exponent among primes = 1 (mod 12)."""
    groups: dict[int, list[PrimeClassification]] = {}
    for c in classification:
        if c.cls == 1:
            groups.setdefault(c.alpha, []).append(c)
    blocks = []
    for alpha in sorted(groups):
        xs = [c.xy.x for c in groups[alpha]]
        ys = [c.xy.y for c in groups[alpha]]
        r = len(xs)
        prod_x = math.prod(xs)
        a = pow(prod_x, 12 * alpha, MOD)
        sum_term = 0
        for j in range(r):
            t = ys[j] * ys[j]
            for i in range(r):
                if i != j:
                    t *= xs[i] * xs[i]
            sum_term += t
        b = pow(prod_x, 12 * alpha - 2, MOD) * sum_term % MOD
        assert b % 9 == 0
        blocks.append(ExponentBlock(alpha, r, a, b))
    return blocks


def _block_sums(blocks: list[ExponentBlock], modulus: int) -> tuple[int, int, int, int]:
    """(C, S1, S2, prodA) mod modulus: C = prod (alpha+1)^r, S1 and S2 the two
    weighted B-sums, prodA = prod A_alpha.  Empty products 1, empty sums 0."""
    c = 1
    prod_a = 1
    for blk in blocks:
        c = c * pow(blk.alpha + 1, blk.r, modulus) % modulus
        prod_a = prod_a * blk.a_mod243 % modulus
    s1 = s2 = 0
    for blk in blocks:
        others = 1
        for other in blocks:
            if other is not blk:
                others = others * other.a_mod243 % modulus
        s1 = (s1 + blk.alpha * blk.b_mod243 * others) % modulus
        s2 = (s2 + blk.alpha * (11 * blk.alpha + 26) * blk.b_mod243 * others) % modulus
    return c, s1, s2, prod_a


def residual_congruence(blocks: list[ExponentBlock], corr: CorrectionData) -> tuple[bool, int, int]:
    """The bullet-5/6 residual congruence exactly as printed, mod 3^4:

      2 C S1  =  41 * (81d + 1 when epsilon != 0, else 1) * C S2   (mod 3^4).

    Returns (holds, lhs, rhs)."""
    c, s1, s2, _ = _block_sums(blocks, _MOD4)
    lhs = 2 * c * s1 % _MOD4
    factor = (81 * corr.d_mod243 + 1) if corr.epsilon else 1
    rhs = 41 * factor * c * s2 % _MOD4
    return lhs == rhs, lhs, rhs


def chain_congruence(blocks: list[ExponentBlock], corr: CorrectionData) -> tuple[bool, int, int]:
    """The same decision in its underlying mod-3^5 form,

      6 C S1 - 123 C S2  =  81 d C prodA   (mod 3^5),

    which keeps the terms the printed bullet drops when reducing mod 3^4.
    Returns (holds, lhs, rhs)."""
    c, s1, s2, prod_a = _block_sums(blocks, MOD)
    lhs = (6 * c * s1 - 123 * c * s2) % MOD
    rhs = 81 * corr.d_mod243 * c * prod_a % MOD
    return lhs == rhs, lhs, rhs


def criterion_b27_literal(n: int) -> Verdict:
    """Evaluate the printed six-bullet b_27 criterion, in order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m = 12 * n + 13
    if m > MAX_SHIFTED:
        raise OverflowError(f"12n+13 = {m} exceeds 64 bits")
    cls = classify(m, "b27")
    witnesses = {"n": n, "shifted": m, "classification": [c.as_dict() for c in cls]}

    bullet1 = [c.p for c in cls if c.cls in (7, 11) and c.alpha % 2 == 1]
    if bullet1:
        witnesses["primes"] = bullet1
        return Verdict(True, "b27.bullet1", witnesses)

    odd_fives = [c for c in cls if c.cls == 5 and c.alpha % 2 == 1]
    u = len(odd_fives)
    witnesses["u"] = u
    if u not in (0, 2):
        witnesses["primes"] = [c.p for c in odd_fives]
        return Verdict(True, "b27.bullet2", witnesses)

    if u == 2:
        nine_divides = [c.p for c in odd_fives if c.xy_val3 >= 2]
        if nine_divides:
            witnesses["primes"] = nine_divides
            return Verdict(True, "b27.bullet3", witnesses)
        ord2_ones = [c.p for c in cls if c.cls == 1 and c.alpha % 3 == 2]
        if ord2_ones:
            witnesses["primes"] = ord2_ones
            return Verdict(True, "b27.bullet4", witnesses)
        return Verdict(False, "b27.none", witnesses)

    # u == 0: the residual congruences
    corr = five_correction(cls)
    blocks = exponent_blocks(cls)
    holds, lhs, rhs = residual_congruence(blocks, corr)
    chain_holds, chain_lhs, chain_rhs = chain_congruence(blocks, corr)
    witnesses.update(
        correction={"s": corr.s, "k_mod3": corr.k_mod3, "epsilon": corr.epsilon,
                    "E_mod243": corr.e_mod243, "d_mod243": corr.d_mod243},
        blocks=[{"alpha": b.alpha, "r": b.r, "A_mod243": b.a_mod243, "B_mod243": b.b_mod243}
                for b in blocks],
        residual={"lhs_mod81": lhs, "rhs_mod81": rhs, "holds": holds},
        chain={"lhs_mod243": chain_lhs, "rhs_mod243": chain_rhs, "holds": chain_holds},
    )
    if corr.epsilon == 0:
        if holds:
            return Verdict(True, "b27.bullet5", witnesses)
    else:
        if holds:
            return Verdict(True, "b27.bullet6", witnesses)
    return Verdict(False, "b27.none", witnesses)
