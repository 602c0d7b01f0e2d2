"""The four unit-orbit characters behind the eigenform coefficient engines.

Each character sends a principal ideal (a unit orbit of generators) to a
power of a suitably normalized generator times a root of unity:

  cubic_char:   a^3 for the associate a = 1 (mod sqrt(-3)) of Z[w];
                conductor sqrt(-3), exponent 3.
  eisen_char:   (-1)^((x -+ y - 1)/2) * a^12 for the associate
                a = x + y*sqrt(-3) with x + y odd and x = 1 (mod 3);
                conductor 4*sqrt(-3), exponent 12, one character per sign.
  gauss_char:   (-1)^(3m) * (+-i)^(3n) * b^12 for any generator b of an
                ideal of Z[i] coprime to 6, where b = i^m (mod 2) and
                b = (1-i)^n (mod 3); conductor 6, exponent 12.

Values are exact ring elements.  A single value need not be a rational
integer; rationality emerges for per-norm aggregates (always for the cubic
and Gauss characters, and at norms = 1 mod 12 for the sign pair on Z[w]),
which is where CharacterValue comes in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quadint import (
    EISEN_ONE,
    EisenInt,
    GaussInt,
    canonical_generator,
    elements_of_norm,
)

MOD = 3**5


@dataclass(frozen=True)
class CharacterValue:
    """A rational-integer character aggregate and its residue mod 3^5."""

    value: int
    value_mod_243: int

    @classmethod
    def of(cls, value: int) -> "CharacterValue":
        return cls(value, value % MOD)


def rational_value(elem) -> CharacterValue:
    """Coerce an exact ring value to a rational integer; raises if it has
    a nonzero sqrt(-3) or i component."""
    if isinstance(elem, GaussInt):
        if elem.b:
            raise ValueError(f"{elem!r} is not a rational integer")
        return CharacterValue.of(elem.a)
    x, y = elem.xy
    if y:
        raise ValueError(f"{elem!r} is not a rational integer")
    return CharacterValue.of(x)


# ---------------------------------------------------------------------------
# Z[w] characters
# ---------------------------------------------------------------------------

def cubic_char(orbit) -> EisenInt:
    """Cube of the = 1 (mod sqrt(-3)) generator; well-defined because the
    three associates satisfying the congruence differ by cube roots of unity."""
    gen = canonical_generator(orbit, "unit_mod_rt3")
    return gen**3


def eisen_char(sign: int, orbit) -> EisenInt:
    """The exponent-12 character pair on Z[w]; sign is +1 or -1.

    Evaluated at the unique associate a = x + y*sqrt(-3) with x + y odd and
    x = 1 (mod 3); the root-of-unity factor is (-1)^((x - sign*y - 1)/2).
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    gen = canonical_generator(orbit, "xy_mod3")
    x, y = gen.xy
    e = (x - sign * y - 1) // 2
    val = gen**12
    return -val if e % 2 else val


# ---------------------------------------------------------------------------
# Z[i] characters
# ---------------------------------------------------------------------------

def _build_log_table() -> dict[tuple[int, int], int]:
    # powers of (1 - i) generate the order-8 unit group of Z[i]/3
    table = {}
    z = GaussInt(1, 0)
    g = GaussInt(1, -1)
    for n in range(8):
        table[(z.a % 3, z.b % 3)] = n
        z = z * g
    return table

_LOG_1MI = _build_log_table()
_I_POWERS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def gauss_char(sign: int, gen: GaussInt) -> GaussInt:
    """The exponent-12 character pair on Z[i]; any generator of the orbit works.

    m in Z/2 with gen = i^m (mod 2) and n in Z/8 with gen = (1-i)^n (mod 3)
    give the value (-1)^(3m) * (sign*i)^(3n) * gen^12.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if isinstance(gen, tuple):
        gen = gen[0]
    nrm = gen.norm()
    if math.gcd(nrm, 6) != 1:
        raise ValueError(f"orbit of norm {nrm} is not coprime to 6")
    a2, b2 = gen.a % 2, gen.b % 2
    if (a2, b2) == (1, 0):
        m = 0
    elif (a2, b2) == (0, 1):
        m = 1
    else:
        raise LookupError(f"{gen!r} is not a unit mod 2 (conductor bug)")
    try:
        n = _LOG_1MI[(gen.a % 3, gen.b % 3)]
    except KeyError:
        raise LookupError(f"{gen!r} is not a unit mod 3 (conductor bug)") from None
    unit_exp = (3 * n) % 4 if sign > 0 else (9 * n) % 4  # (-i)^(3n) = i^(9n)
    val = _I_POWERS[unit_exp] * gen**12
    return -val if (3 * m) % 2 else val


# ---------------------------------------------------------------------------
# per-norm aggregates
# ---------------------------------------------------------------------------

_CHARS = {
    "cubic": ("eisen", 3, lambda orbit: cubic_char(orbit)),
    "eisen+": ("eisen", 6, lambda orbit: eisen_char(1, orbit)),
    "eisen-": ("eisen", 6, lambda orbit: eisen_char(-1, orbit)),
    "gauss+": ("gauss", 6, lambda orbit: gauss_char(1, orbit[0])),
    "gauss-": ("gauss", 6, lambda orbit: gauss_char(-1, orbit[0])),
}

CHAR_NAMES = tuple(_CHARS)


def char_ring(name: str) -> str:
    return _CHARS[name][0]


def char_support(name: str) -> int:
    """Product of rational primes sharing a factor with the conductor norm."""
    return _CHARS[name][1]


def char_on_orbit(name: str, orbit):
    return _CHARS[name][2](orbit)


def char_norm_sum(name: str, n: int):
    """Sum of character values over all ideals of norm n coprime to the
    conductor, as an exact ring element (zero element if there are none)."""
    ring, support, fn = _CHARS[name]
    zero = EisenInt(0, 0) if ring == "eisen" else GaussInt(0, 0)
    if n < 1 or math.gcd(n, support) != 1:
        return zero
    total = zero
    for orbit in elements_of_norm(ring, n):
        total = total + fn(orbit)
    return total
