"""Dimensions of H^i(S, O_S(D)) for Weil divisors on a fake quadric."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import frac
from .classgroup import (
    CanonicalClass,
    canonical_form,
    horizontal_membership,
    lattice_point,
)
from .errors import DegreeBoundExceeded
from .surface import Divisor, FakeQuadric, canonical_divisor


@dataclass(frozen=True)
class BettiTriple:
    h0: int
    h1: int
    h2: int
    chi: int

    def to_json(self) -> dict:
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "chi": self.chi}


class Region(enum.Enum):
    H0_ONLY = "H0only"
    H1_ONLY = "H1only"
    H2_ONLY = "H2only"
    ALL_ZERO = "AllZero"
    THRESHOLD = "Threshold"


def _as_class(S: FakeQuadric, D) -> CanonicalClass:
    return D if isinstance(D, CanonicalClass) else canonical_form(S, D)


def b_j(S: FakeQuadric, D, j: int) -> int:
    """``1 + phi_D - sum {(a_hat_i + (j - c_D) q_i) / d_i}``."""
    cc = _as_class(S, D)
    val = 1 + cc.phi(S)
    for (d, q), a in zip(S.pairs, cc.a_hat):
        val -= frac(Fraction(a + (j - cc.c) * q, d))
    assert val.denominator == 1
    return int(val)


def h0(S: FakeQuadric, D) -> int:
    cc = _as_class(S, D)
    if cc.c < 0:
        return 0
    return sum(max(b_j(S, cc, j), 0) for j in range(cc.c + 1))


def _dual(S: FakeQuadric, D) -> CanonicalClass:
    if isinstance(D, CanonicalClass):
        from .classgroup import representative

        D = representative(S, D)
    return canonical_form(S, canonical_divisor(S) - D)


def h2(S: FakeQuadric, D) -> int:
    return h0(S, _dual(S, D))


def chi(S: FakeQuadric, D) -> int:
    cc = _as_class(S, D)
    if cc.c >= 0:
        return sum(b_j(S, cc, j) for j in range(cc.c + 1))
    if cc.c == -1:
        return 0
    dual = _dual(S, D)
    return sum(b_j(S, dual, j) for j in range(-(cc.c + 2) + 1))


def betti(S: FakeQuadric, D) -> BettiTriple:
    cc = _as_class(S, D)
    a, c, x = h0(S, cc), h2(S, D), chi(S, cc)
    h1 = a + c - x
    if h1 < 0:
        raise ArithmeticError(f"negative h1 for class {cc}: h0={a} h2={c} chi={x}")
    return BettiTriple(a, h1, c, x)


def region(S: FakeQuadric, D) -> Region:
    cc = _as_class(S, D)
    phi, c = cc.phi(S), cc.c
    if c == -1:
        return Region.ALL_ZERO
    if phi > -S.chi_orb and c > -2:
        return Region.H0_ONLY
    if phi < 0 and c < 0:
        return Region.H2_ONLY
    if (phi < 0 and c >= 0) or (phi > -S.chi_orb and c <= -2):
        return Region.H1_ONLY
    return Region.THRESHOLD


def combined_correction(d: int, q: int, n: int, m: int) -> Fraction:
    """Sum of the two local Riemann-Roch corrections at ``1/d(1, q)`` and ``1/d(1, -q)``."""
    if m < -1:
        raise ValueError("m must be at least -1")
    total = Fraction(m * (d - 1), 2 * d)
    for j in range(m + 1):
        total -= frac(Fraction(n + (j - m) * q, d))
    return total


def chi_riemann_roch(S: FakeQuadric, D) -> Fraction:
    """Euler characteristic from the singular Riemann-Roch formula, valid for ``c_D >= -1``."""
    cc = _as_class(S, D)
    if cc.c < -1:
        raise ValueError("the combined correction needs c_D >= -1")
    phi = cc.phi(S)
    total = 1 + (cc.c + 1) * phi + Fraction(cc.c) * S.chi_orb / 2
    for (d, q), a in zip(S.pairs, cc.a_hat):
        total += combined_correction(d, q, a, cc.c)
    return total


def h1_on_fiber_axis(S: FakeQuadric, D) -> Optional[int]:
    """Closed form for ``c_D = 0``, ``phi_D <= 0``, ``D`` not principal; ``None`` elsewhere."""
    cc = _as_class(S, D)
    if cc.c != 0 or cc.phi(S) > 0:
        return None
    if cc.f_hat == 0 and not any(cc.a_hat):
        return None
    return -1 - sum(a // d for a, d in zip(cc.a_hat, S.ds)) - cc.f_hat


def h1_on_section_axis(S: FakeQuadric, D: Divisor) -> Optional[int]:
    """Closed form for ``phi_D = 0``, ``c_D < 0``; ``None`` elsewhere."""
    lp = lattice_point(S, D)
    if lp.phi != 0 or lp.c >= 0:
        return None
    member = horizontal_membership(S, D)
    if member is None:
        return 0
    c, e, g = member
    return -1 - c // S.kappa - e // S.kappa - g


# --- brute-force oracle for h^0 -------------------------------------------------

DEFAULT_DEGREE_BOUND = 60


def _rank(rows: list[list[Fraction]], ncols: int) -> int:
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    col = 0
    while rows and col < ncols:
        pivot = next((i for i, r in enumerate(rows) if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        prow = rows.pop(pivot)
        inv = 1 / prow[col]
        prow = [x * inv for x in prow]
        new_rows = []
        for r in rows:
            if r[col]:
                k = r[col]
                r = [a - k * b for a, b in zip(r, prow)]
            if any(r):
                new_rows.append(r)
        rows = new_rows
        rank += 1
        col += 1
    return rank


def h0_oracle(S: FakeQuadric, D, degree_bound: int = DEFAULT_DEGREE_BOUND) -> int:
    """Count sections as weighted-homogeneous polynomials with prescribed vanishing orders.

    Works in the weighted plane with weights ``(1, 1, alpha)``; requires every
    ``q_i >= 1`` (so ``alpha >= 1``). The special points sit at ``gamma_i = i``.
    """
    if any(q < 1 for q in S.qs) or S.alpha < 1:
        raise ValueError("the oracle needs q_i >= 1 for every i")
    cc = _as_class(S, D)
    if cc.c < 0:
        return 0
    alpha = S.alpha
    deg = cc.c * alpha + cc.f_hat
    if deg < 0:
        return 0
    if deg > degree_bound:
        raise DegreeBoundExceeded(f"degree {deg} exceeds bound {degree_bound}")
    # ord H(x, y, 1) >= f_hat keeps only monomials x^a y^b z^k with k <= c_D.
    monomials = []
    for k in range(0, min(cc.c, deg // alpha) + 1):
        rest = deg - alpha * k
        if rest < cc.f_hat:
            continue
        for a in range(rest + 1):
            monomials.append((a, rest - a, k))
    if not monomials:
        return 0
    rows: list[list[Fraction]] = []
    for i, ((d, q), ahat) in enumerate(zip(S.pairs, cc.a_hat), start=1):
        gamma = Fraction(i)
        bound = cc.c * q - ahat
        # H(X + gamma, 1, Z) = sum coef * binom(a, u) gamma^(a-u) X^u Z^k
        conditions: dict[tuple[int, int], list[Fraction]] = {}
        for col, (a, _b, k) in enumerate(monomials):
            for u in range(a + 1):
                if d * u + q * k >= bound:
                    continue
                row = conditions.setdefault((u, k), [Fraction(0)] * len(monomials))
                row[col] += math.comb(a, u) * gamma ** (a - u)
        rows.extend(conditions.values())
    return len(monomials) - _rank(rows, len(monomials))
