"""Exact rational helpers: floors, fractional parts, gcd/lcm, Bezout and CRT."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def floor_frac(x: RationalLike) -> tuple[int, Fraction]:
    """Split ``x`` into ``(floor(x), {x})`` with ``0 <= {x} < 1``."""
    x = as_rational(x)
    fl = x.numerator // x.denominator
    return fl, x - fl


def frac(x: RationalLike) -> Fraction:
    return floor_frac(x)[1]


def floor(x: RationalLike) -> int:
    return floor_frac(x)[0]


def ceil(x: RationalLike) -> int:
    x = as_rational(x)
    return -((-x.numerator) // x.denominator)


def gcd_many(xs: Iterable[int]) -> int:
    """gcd of all entries; the empty gcd is 0."""
    return reduce(math.gcd, (abs(int(x)) for x in xs), 0)


def lcm_many(xs: Iterable[int]) -> int:
    xs = [int(x) for x in xs]
    if not xs:
        raise ValueError("lcm of an empty list is undefined")
    if any(x == 0 for x in xs):
        raise ValueError("lcm requires nonzero entries")
    return reduce(math.lcm, (abs(x) for x in xs), 1)


@dataclass(frozen=True)
class BezoutPair:
    u: int
    v: int
    g: int


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # a, b >= 0, not both zero. When a divides b we stop at (a, 1, 0).
    if b == 0 or (a != 0 and b % a == 0):
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def bezout(a: int, b: int) -> BezoutPair:
    """Deterministic ``u, v`` with ``u*a + v*b = gcd(a, b)``.

    Uses the classical extended Euclid recursion on ``|a|, |b|`` with the
    extra base case ``|a|`` divides ``|b|`` giving ``(1, 0)``.
    """
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        raise ValueError("bezout(0, 0) is undefined")
    g, u, v = _egcd(abs(a), abs(b))
    if a < 0:
        u = -u
    if b < 0:
        v = -v
    return BezoutPair(u, v, g)


def crt_solve(congruences: Sequence[tuple[int, int]]) -> Optional[tuple[int, int]]:
    """Solve ``x = r_i (mod m_i)``; return ``(x mod M, M)`` or ``None`` if incompatible."""
    x, mod = 0, 1
    for r, m in congruences:
        if m < 1:
            raise ValueError("moduli must be positive")
        bp = bezout(mod, m)
        g = bp.g
        if (r - x) % g:
            return None
        step = (r - x) // g * bp.u % (m // g)
        x = x + mod * step
        mod = mod * m // g
        x %= mod
    return x, mod


def lcm_via_complements(ds: Sequence[int], qs: Sequence[int]) -> int:
    """lcm of the orders computed as gcd of complementary products over gcd of double complements.

    Requires ``gcd(q_i, d_i) = 1`` and ``sum q_i/d_i`` integral, and at least two orders.
    """
    if len(ds) != len(qs):
        raise ValueError("ds and qs must have equal length")
    if len(ds) < 2:
        raise ValueError("at least two orders are required")
    if any(d < 1 for d in ds):
        raise ValueError("orders must be positive")
    if any(math.gcd(d, q) != 1 for d, q in zip(ds, qs)):
        raise ValueError("each q_i must be coprime to d_i")
    if sum(Fraction(q, d) for d, q in zip(ds, qs)).denominator != 1:
        raise ValueError("sum of q_i/d_i must be an integer")
    total = math.prod(ds)
    singles = gcd_many(total // d for d in ds)
    pairs = gcd_many(
        total // (ds[i] * ds[j]) for i in range(len(ds)) for j in range(i + 1, len(ds))
    )
    return singles // pairs
