"""Reducible normal fake quadrics: invariants, named curves, divisors, intersections."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .arith import gcd_many, lcm_many
from .errors import InvalidOrder, NonCoprimePair, NonIntegralAlpha, UnknownCurve

_KINDS = ("C", "E", "A", "F", "G")


@dataclass(frozen=True, order=True)
class Curve:
    """A named irreducible curve on the surface.

    ``kind`` is one of C, E, A, F, G. ``A`` curves carry a 1-based ``index``;
    ``F`` and ``G`` curves carry an opaque ``label`` telling distinct fibers apart.
    """

    kind: str
    index: int = 0
    label: str = ""

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise UnknownCurve(f"unknown curve kind {self.kind!r}")
        if self.kind == "A" and self.index < 1:
            raise UnknownCurve("A curves are indexed from 1")
        if self.kind != "A" and self.index:
            raise UnknownCurve(f"{self.kind} curves take no index")
        if self.kind in ("C", "E", "A") and self.label:
            raise UnknownCurve(f"{self.kind} curves take no label")

    @property
    def is_vertical(self) -> bool:
        return self.kind in ("A", "F")

    def __str__(self) -> str:
        if self.kind == "A":
            return f"A{self.index}"
        if self.kind in ("F", "G"):
            return f"{self.kind}:{self.label}" if self.label else self.kind
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "Curve":
        text = text.strip()
        if text in ("C", "E"):
            return cls(text)
        m = re.fullmatch(r"A(\d+)", text)
        if m:
            return cls("A", index=int(m.group(1)))
        m = re.fullmatch(r"([FG]):(.*)", text)
        if m:
            return cls(m.group(1), label=m.group(2))
        if text in ("F", "G"):
            return cls(text)
        raise UnknownCurve(f"cannot parse curve name {text!r}")


C = Curve("C")
E = Curve("E")


def A(i: int) -> Curve:
    return Curve("A", index=i)


def F(label: str = "") -> Curve:
    return Curve("F", label=label)


def G(label: str = "") -> Curve:
    return Curve("G", label=label)


CurveLike = Union[Curve, str]


def _as_curve(c: CurveLike) -> Curve:
    return c if isinstance(c, Curve) else Curve.parse(c)


class Divisor(Mapping[Curve, int]):
    """Formal integer combination of named curves (immutable, zero terms dropped)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Union[Mapping[CurveLike, int], Iterable]] = None):
        acc: dict[Curve, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for key, mult in items:
            if isinstance(mult, bool) or not isinstance(mult, int):
                raise TypeError("divisor multiplicities must be integers")
            curve = _as_curve(key)
            acc[curve] = acc.get(curve, 0) + mult
        self._terms = {k: v for k, v in sorted(acc.items()) if v}

    def __getitem__(self, curve: CurveLike) -> int:
        return self._terms[_as_curve(curve)]

    def get(self, curve, default=0):
        return self._terms.get(_as_curve(curve), default)

    def __iter__(self) -> Iterator[Curve]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self.items()) + list(other.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({k: -v for k, v in self.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({c: k * v for c, v in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"Divisor({self.to_json()!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for c, v in self.items():
            coef = "" if v == 1 else "-" if v == -1 else str(v)
            parts.append(f"{coef}{c}")
        return " + ".join(parts).replace("+ -", "- ")

    def filter(self, predicate) -> "Divisor":
        return Divisor({c: v for c, v in self.items() if predicate(c)})

    def coefficient_gcd(self) -> int:
        return gcd_many(self.values())

    def to_json(self) -> dict[str, int]:
        return {str(c): v for c, v in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "Divisor":
        return cls({Curve.parse(k): int(v) for k, v in data.items()})


@dataclass(frozen=True)
class FakeQuadric:
    """Surface determined by the pairs ``(d_i, q_i)``.

    The ``allow_smooth`` flag admits ``d_i = 1`` (a smooth special fiber) and an
    empty list; both arise from the Lê-Yomdin construction.
    """

    pairs: tuple[tuple[int, int], ...]
    allow_smooth: bool = False
    alpha: int = field(init=False)
    kappa: int = field(init=False)
    chi_orb: Fraction = field(init=False)

    def __post_init__(self):
        pairs = tuple((int(d), int(q)) for d, q in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        min_order = 1 if self.allow_smooth else 2
        if not pairs and not self.allow_smooth:
            raise InvalidOrder("at least one pair (d_i, q_i) is required")
        for d, q in pairs:
            if d < min_order:
                raise InvalidOrder(f"order d={d} must be at least {min_order}")
            if math.gcd(d, q) != 1:
                raise NonCoprimePair(f"gcd({d}, {q}) != 1")
        alpha = sum((Fraction(q, d) for d, q in pairs), Fraction(0))
        if alpha.denominator != 1:
            raise NonIntegralAlpha(f"sum q_i/d_i = {alpha} is not an integer")
        object.__setattr__(self, "alpha", int(alpha))
        object.__setattr__(self, "kappa", lcm_many([d for d, _ in pairs]) if pairs else 1)
        chi = 2 - sum((1 - Fraction(1, d) for d, _ in pairs), Fraction(0))
        object.__setattr__(self, "chi_orb", chi)

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def ds(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.pairs)

    @property
    def qs(self) -> tuple[int, ...]:
        return tuple(q for _, q in self.pairs)

    def d(self, i: int) -> int:
        return self.pairs[i - 1][0]

    def q(self, i: int) -> int:
        return self.pairs[i - 1][1]

    def singular_types(self) -> list[tuple[str, int, int]]:
        """Point name, order and weight for each singular point ``1/d(1, w)``.

        ``P_i = A_i ∩ C`` has type ``1/d_i(1, -q_i)`` and ``Q_i = A_i ∩ E`` has
        type ``1/d_i(1, q_i)``; weights are reduced modulo ``d_i``.
        """
        out = []
        for i, (d, q) in enumerate(self.pairs, start=1):
            if d > 1:
                out.append((f"P{i}", d, (-q) % d))
                out.append((f"Q{i}", d, q % d))
        return out

    def check_curve(self, curve: Curve) -> None:
        if curve.kind == "A" and not 1 <= curve.index <= self.r:
            raise UnknownCurve(f"A{curve.index} out of range 1..{self.r}")

    def check_divisor(self, D: Divisor) -> None:
        for c in D:
            self.check_curve(c)

    def to_json(self) -> dict:
        return {"pairs": [[d, q] for d, q in self.pairs]}


def new_fake_quadric(pairs: Sequence[Sequence[int]]) -> FakeQuadric:
    return FakeQuadric(tuple(tuple(p) for p in pairs))


def genus_G(S: FakeQuadric) -> int:
    """Genus of the curve G, from Riemann-Hurwitz for the degree-kappa cover of P^1."""
    g = 1 - S.kappa * S.chi_orb / 2
    assert g.denominator == 1 and g >= 0, "kappa * chi_orb must be an even integer <= 2"
    return int(g)


def _pair_value(S: FakeQuadric, a: Curve, b: Curve) -> Fraction:
    ka, kb = sorted((a.kind, b.kind))
    pair = ka + kb
    if pair in ("CF", "EF"):
        return Fraction(1)
    if pair in ("AC", "AE"):
        i = a.index if a.kind == "A" else b.index
        return Fraction(1, S.d(i))
    if pair == "FG":
        return Fraction(S.kappa)
    if pair == "AG":
        i = a.index if a.kind == "A" else b.index
        return Fraction(S.kappa, S.d(i))
    return Fraction(0)


def intersect(S: FakeQuadric, D1: Divisor, D2: Divisor) -> Fraction:
    """Rational intersection number, extended bilinearly from the generator table."""
    S.check_divisor(D1)
    S.check_divisor(D2)
    total = Fraction(0)
    for a, ma in D1.items():
        for b, mb in D2.items():
            total += ma * mb * _pair_value(S, a, b)
    return total


CANONICAL_FIBER_LABEL = "K"


def canonical_divisor(S: FakeQuadric) -> Divisor:
    """``K_S = -C - E + (r-2) F - sum A_i`` with the fiber labelled ``K``."""
    terms = {C: -1, E: -1, F(CANONICAL_FIBER_LABEL): S.r - 2}
    for i in range(1, S.r + 1):
        terms[A(i)] = -1
    return Divisor(terms)
