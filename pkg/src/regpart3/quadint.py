"""Exact arithmetic in Z[i] and Z[w] (w a primitive cube root of unity).

Both rings are PIDs, so ideals are identified with unit orbits of their
generators: orbit size 4 in Z[i] (units 1, i, -1, -i) and 6 in Z[w]
(units +-1, +-w, +-w^2).

Elements of Z[w] are stored in (1, w) coordinates.  The index-2 subring
Z[sqrt(-3)] corresponds to elements with even w-coordinate; conversion to
(x, y) with value x + y*sqrt(-3) is only defined there and is rejected
elsewhere, so no ideal is silently dropped.

Representations p = x^2 + y^2 and p = z^2 + 3w^2 are found by Cornacchia's
algorithm (seeded by a Tonelli-Shanks square root) and then normalized by
sign/swap adjustments to fixed congruence classes, making every output
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


# ---------------------------------------------------------------------------
# ring elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussInt:
    """a + b*i with integer a, b."""

    a: int
    b: int

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.a, -self.b)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        a, b, c, d = self.a, self.b, other.a, other.b
        return GaussInt(a * c - b * d, a * d + b * c)

    def __pow__(self, e: int) -> "GaussInt":
        if e < 0:
            raise ValueError("negative powers not supported")
        r = GaussInt(1, 0)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def conj(self) -> "GaussInt":
        return GaussInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def associates(self) -> tuple["GaussInt", ...]:
        """The unit orbit: z, iz, -z, -iz."""
        a, b = self.a, self.b
        return (GaussInt(a, b), GaussInt(-b, a), GaussInt(-a, -b), GaussInt(b, -a))

    def __repr__(self) -> str:
        return f"GaussInt({self.a}, {self.b})"


GAUSS_ONE = GaussInt(1, 0)
GAUSS_I = GaussInt(0, 1)


@dataclass(frozen=True)
class EisenInt:
    """u + v*w with integer u, v, where w = (-1 + sqrt(-3))/2, w^2 = -1 - w."""

    u: int
    v: int

    def __add__(self, other: "EisenInt") -> "EisenInt":
        return EisenInt(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "EisenInt") -> "EisenInt":
        return EisenInt(self.u - other.u, self.v - other.v)

    def __neg__(self) -> "EisenInt":
        return EisenInt(-self.u, -self.v)

    def __mul__(self, other: "EisenInt") -> "EisenInt":
        a, b, c, d = self.u, self.v, other.u, other.v
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = -1 - w
        return EisenInt(a * c - b * d, a * d + b * c - b * d)

    def __pow__(self, e: int) -> "EisenInt":
        if e < 0:
            raise ValueError("negative powers not supported")
        r = EisenInt(1, 0)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def conj(self) -> "EisenInt":
        # conj(w) = w^2 = -1 - w
        return EisenInt(self.u - self.v, -self.v)

    def norm(self) -> int:
        return self.u * self.u - self.u * self.v + self.v * self.v

    def associates(self) -> tuple["EisenInt", ...]:
        """The unit orbit: z, wz, w^2 z and their negatives."""
        u, v = self.u, self.v
        wz = EisenInt(-v, u - v)
        w2z = EisenInt(v - u, -u)
        return (
            EisenInt(u, v), wz, w2z,
            EisenInt(-u, -v), -wz, -w2z,
        )

    @classmethod
    def from_xy(cls, x: int, y: int) -> "EisenInt":
        """The element x + y*sqrt(-3)  (sqrt(-3) = 1 + 2w)."""
        return cls(x + y, 2 * y)

    @property
    def xy(self) -> tuple[int, int]:
        """(x, y) with value x + y*sqrt(-3); only defined when v is even."""
        if self.v % 2:
            raise ValueError(f"{self!r} is not in Z[sqrt(-3)]")
        return ((2 * self.u - self.v) // 2, self.v // 2)

    def __repr__(self) -> str:
        return f"EisenInt({self.u}, {self.v})"


EISEN_ONE = EisenInt(1, 0)
SQRT_M3 = EisenInt.from_xy(0, 1)  # 1 + 2w, norm 3


# ---------------------------------------------------------------------------
# modular square roots and Cornacchia
# ---------------------------------------------------------------------------

def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks); raises if none."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def cornacchia(d: int, p: int) -> tuple[int, int]:
    """Some (x, y) with x^2 + d*y^2 = p, for prime p with -d a residue mod p."""
    r = sqrt_mod(p - d % p, p)
    if 2 * r < p:
        r = p - r
    a, b = p, r
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    y2, rem = divmod(p - b * b, d)
    if rem:
        raise ValueError(f"no representation x^2 + {d}y^2 = {p}")
    y = math.isqrt(y2)
    if y * y != y2:
        raise ValueError(f"no representation x^2 + {d}y^2 = {p}")
    return b, y


# ---------------------------------------------------------------------------
# normalized representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoSquaresRep:
    """p = x^2 + y^2, normalized by residue class of p mod 12.

    p = 5 (mod 12): x odd, y even, x = 1 and y = 2 (mod 3).
    p = 1 (mod 12): x = 1 (mod 3), y = 0 (mod 3), y > 0.
    """

    p: int
    x: int
    y: int


def two_squares(p: int) -> TwoSquaresRep:
    """The normalized representation p = x^2 + y^2 for a prime p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    x, y = cornacchia(1, p)
    if p % 12 == 5:
        if x % 2 == 0:
            x, y = y, x
        if x % 3 != 1:
            x = -x
        if y % 3 != 2:
            y = -y
    else:  # p = 1 (mod 12): exactly one of x, y is divisible by 3
        if x % 3 == 0:
            x, y = y, x
        if x % 3 != 1:
            x = -x
        y = abs(y)
    rep = TwoSquaresRep(p, x, y)
    assert rep.x * rep.x + rep.y * rep.y == p
    return rep


@dataclass(frozen=True)
class EisenSquaresRep:
    """p = z^2 + 3*w^2, normalized per mode.

    mode "mod3"  (any p = 1 mod 3): z = 1 (mod 3), w > 0.
    mode "mod12", p = 7 (mod 12): z even, w odd, z > 0, z + w = 1 (mod 4).
    mode "mod12", p = 1 (mod 12): z odd, w even, z = 1 (mod 3), w >= 0.
    """

    p: int
    z: int
    w: int
    mode: str


def eisen_squares(p: int, mode: str = "mod3") -> EisenSquaresRep:
    """The normalized representation p = z^2 + 3w^2 for a prime p = 1 (mod 3)."""
    if p % 3 != 1:
        raise ValueError(f"{p} is not 1 mod 3")
    if mode not in ("mod3", "mod12"):
        raise ValueError(f"unknown mode {mode!r}")
    z, w = cornacchia(3, p)
    if mode == "mod3":
        if z % 3 != 1:
            z = -z
        w = abs(w)
    elif p % 12 == 7:
        # z even and w odd are forced; z > 0 fixes one free sign,
        # then z + w = 1 (mod 4) fixes the other.
        z = abs(z)
        if (z + w) % 4 != 1:
            w = -w
        assert (z - w) % 4 == 3
    else:  # p = 1 (mod 12): z odd, w even forced
        if z % 3 != 1:
            z = -z
        w = abs(w)
    rep = EisenSquaresRep(p, z, w, mode)
    assert rep.z * rep.z + 3 * rep.w * rep.w == p
    return rep


# ---------------------------------------------------------------------------
# orbit enumeration
# ---------------------------------------------------------------------------

def _orbit_key(z) -> tuple:
    return min((t.u, t.v) if isinstance(t, EisenInt) else (t.a, t.b)
               for t in z.associates())


def elements_of_norm(ring: str, n: int) -> list[tuple]:
    """All ring elements of norm n, grouped into unit orbits.

    Returns a list of orbits (tuples of 4 elements for "gauss", 6 for
    "eisen"); the union over orbits is complete and duplicate-free.
    """
    if n < 1:
        raise ValueError(f"norm must be positive, got {n}")
    found = {}
    if ring == "gauss":
        for a in range(-math.isqrt(n), math.isqrt(n) + 1):
            b2 = n - a * a
            b = math.isqrt(b2)
            if b * b != b2:
                continue
            for bb in {b, -b}:
                z = GaussInt(a, bb)
                found.setdefault(_orbit_key(z), z)
    elif ring == "eisen":
        vmax = math.isqrt(4 * n // 3)
        for v in range(-vmax, vmax + 1):
            disc = 4 * n - 3 * v * v
            s = math.isqrt(disc)
            if s * s != disc:
                continue
            for ss in {s, -s}:
                if (v + ss) % 2 == 0:
                    z = EisenInt((v + ss) // 2, v)
                    found.setdefault(_orbit_key(z), z)
    else:
        raise ValueError(f"unknown ring {ring!r}")
    return [found[k].associates() for k in sorted(found)]


def ideal_count(ring: str, n: int) -> int:
    """Number of ideals of norm n (= number of unit orbits)."""
    return len(elements_of_norm(ring, n))


# ---------------------------------------------------------------------------
# canonical generators
# ---------------------------------------------------------------------------

def _residue_mod_sqrt_m3(z: EisenInt) -> int:
    # w = 1 (mod sqrt(-3)), so u + vw reduces to u + v mod 3.
    return (z.u + z.v) % 3


def canonical_generator(orbit, constraint: str = "none"):
    """Pick a generator from a unit orbit under a congruence constraint.

    "unit_mod_rt3":  an associate = 1 (mod sqrt(-3)) in Z[w].  Three
        associates satisfy this (the units 1, w, w^2 are all = 1 mod
        sqrt(-3)); they share a common cube, so any deterministic pick
        gives a well-defined cubic character.  Smallest (u, v) is returned.
    "xy_mod3":  the associate x + y*sqrt(-3) with x, y integral and
        x = 1 (mod 3) (x + y is odd automatically for odd norm).  This
        associate is unique; a LookupError reports any violation.
    "none":  smallest coordinate tuple, as a fixed representative.
    """
    elems = orbit if isinstance(orbit, tuple) else tuple(orbit.associates())
    nrm = elems[0].norm()
    if constraint == "none":
        return min(elems, key=lambda t: (t.u, t.v) if isinstance(t, EisenInt) else (t.a, t.b))
    if constraint == "unit_mod_rt3":
        if nrm % 3 == 0:
            raise ValueError(f"orbit of norm {nrm} is not coprime to sqrt(-3)")
        good = [z for z in elems if _residue_mod_sqrt_m3(z) == 1]
        if not good:
            raise LookupError(f"no associate = 1 mod sqrt(-3) in orbit of norm {nrm}")
        return min(good, key=lambda t: (t.u, t.v))
    if constraint == "xy_mod3":
        if math.gcd(nrm, 6) != 1:
            raise ValueError(f"orbit of norm {nrm} is not coprime to 2 and sqrt(-3)")
        good = []
        for z in elems:
            if z.v % 2:
                continue
            x, y = z.xy
            if (x + y) % 2 == 1 and x % 3 == 1:
                good.append(z)
        if len(good) != 1:
            raise LookupError(
                f"expected exactly one valid associate in orbit of norm {nrm}, found {len(good)}"
            )
        return good[0]
    raise ValueError(f"unknown constraint {constraint!r}")
