"""Divisor class group of a fake quadric: canonical forms, lattice map, torsion."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import crt_solve, gcd_many, lcm_many
from .surface import A, C, Curve, Divisor, F, FakeQuadric, E

GENERIC_FIBER = F("")


@dataclass(frozen=True)
class CanonicalClass:
    """Unique representative ``c_D C + sum a_hat_i A_i + f_hat F`` with ``0 <= a_hat_i < d_i``."""

    c: int
    a_hat: tuple[int, ...]
    f_hat: int

    def phi(self, S: FakeQuadric) -> Fraction:
        return self.f_hat + sum((Fraction(a, d) for a, d in zip(self.a_hat, S.ds)), Fraction(0))

    def to_json(self) -> dict:
        return {"c": self.c, "a_hat": list(self.a_hat), "f_hat": self.f_hat}


@dataclass(frozen=True)
class LatticePoint:
    phi: Fraction
    c: int


@dataclass(frozen=True)
class GroupStructure:
    rank: int
    invariant_factors: tuple[int, ...]

    def to_json(self) -> dict:
        return {"rank": self.rank, "factors": list(self.invariant_factors)}


def _raw_coordinates(S: FakeQuadric, D: Divisor) -> tuple[int, int, list[int], int]:
    """Coefficients (c, e, a_i, f) after folding every G into kappa*C and every fiber into F."""
    S.check_divisor(D)
    c = e = f = 0
    a = [0] * S.r
    for curve, m in D.items():
        if curve.kind == "C":
            c += m
        elif curve.kind == "E":
            e += m
        elif curve.kind == "G":
            c += S.kappa * m
        elif curve.kind == "F":
            f += m
        else:
            a[curve.index - 1] += m
    return c, e, a, f


def canonical_form(S: FakeQuadric, D: Divisor) -> CanonicalClass:
    c, e, a, f = _raw_coordinates(S, D)
    a_hat = []
    carry = 0
    for (d, q), ai in zip(S.pairs, a):
        total = ai + e * q
        a_hat.append(total % d)
        carry += total // d
    return CanonicalClass(c + e, tuple(a_hat), f - e * S.alpha + carry)


def representative(S: FakeQuadric, cc: CanonicalClass, fiber: Curve = GENERIC_FIBER) -> Divisor:
    terms = {C: cc.c, fiber: cc.f_hat}
    for i, a in enumerate(cc.a_hat, start=1):
        terms[A(i)] = a
    return Divisor(terms)


def vertical_representative(S: FakeQuadric, D: Divisor, fiber: Curve = GENERIC_FIBER) -> Divisor:
    """Vertical divisor ``sum a_hat_i A_i + f_hat F`` equivalent to ``D``; needs ``D.F = 0``."""
    cc = canonical_form(S, D)
    if cc.c != 0:
        raise ValueError("class has nonzero degree on the fibers; no vertical representative")
    return representative(S, cc, fiber)


def lattice_point(S: FakeQuadric, D: Divisor) -> LatticePoint:
    cc = canonical_form(S, D)
    return LatticePoint(cc.phi(S), cc.c)


def group_structure(S: FakeQuadric) -> GroupStructure:
    """Rank and torsion invariant factors ``m_i = dhat_i / dhat_{i-1}``, ``i = 1..r-1``."""
    ds = S.ds
    hats = [1]
    for k in range(1, len(ds)):
        hats.append(gcd_many(math.prod(c) for c in itertools.combinations(ds, k)))
    factors = tuple(hats[i] // hats[i - 1] for i in range(1, len(hats)))
    return GroupStructure(2, factors)


def linearly_equivalent(S: FakeQuadric, D1: Divisor, D2: Divisor) -> bool:
    return canonical_form(S, D1) == canonical_form(S, D2)


def is_principal(S: FakeQuadric, D: Divisor) -> bool:
    cc = canonical_form(S, D)
    return cc.c == 0 and cc.f_hat == 0 and not any(cc.a_hat)


def torsion_order(S: FakeQuadric, D: Divisor) -> Optional[int]:
    """Order of ``D`` in cl(S), or ``None`` when the class is not torsion."""
    cc = canonical_form(S, D)
    if cc.c != 0 or cc.phi(S) != 0:
        return None
    # k*D ~ 0 exactly when every k*a_hat_i vanishes mod d_i (phi = 0 then forces f_hat).
    return lcm_many([d // math.gcd(d, a) for d, a in zip(S.ds, cc.a_hat)] or [1])


def horizontal_membership(S: FakeQuadric, D: Divisor) -> Optional[tuple[int, int, int]]:
    """``(c, e, 0)`` with ``D ~ cC + eE`` when such integers exist, else ``None``.

    ``e`` is the least nonnegative solution of ``e q_i = a_hat_i (mod d_i)``.
    """
    cc = canonical_form(S, D)
    if cc.phi(S) != 0:
        return None
    congruences = []
    for (d, q), a in zip(S.pairs, cc.a_hat):
        congruences.append((a * pow(q, -1, d) % d if d > 1 else 0, d))
    sol = crt_solve(congruences)
    if sol is None:
        return None
    e = sol[0]
    return cc.c - e, e, 0


def torsion_generator(S: FakeQuadric) -> Divisor:
    """The class ``T = E - C`` of order kappa."""
    return Divisor({E: 1, C: -1})


def divide_class(S: FakeQuadric, D: Divisor, d: int) -> Optional[Divisor]:
    """A divisor ``H`` with ``d H ~ D``, or ``None`` when the class is not divisible by ``d``."""
    if d < 1:
        raise ValueError("d must be positive")
    cc = canonical_form(S, D)
    if cc.c % d:
        return None
    choices = []
    for di, a in zip(S.ds, cc.a_hat):
        sols = [b for b in range(di) if (d * b - a) % di == 0]
        if not sols:
            return None
        choices.append(sols)
    for bs in itertools.product(*choices):
        rest = cc.f_hat - sum((d * b) // di for b, di in zip(bs, S.ds))
        if rest % d == 0:
            return representative(S, CanonicalClass(cc.c // d, tuple(bs), rest // d))
    return None
