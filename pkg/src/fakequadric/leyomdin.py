"""From weighted Lê-Yomdin data to a horizontal cover of a fake quadric and its monodromy."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .arith import bezout, gcd_many, lcm_many
from .classgroup import is_principal
from .cover import CoverSpec
from .errors import AlphaNotZero, InvalidLYInput, LcmMismatch
from .p1cover import CycPoly, P1Cover
from .surface import A, C, Divisor, E, FakeQuadric, G

LY_FIELDS = ("w_x", "w_y", "a_x", "a_y", "e", "kappa", "s", "m_x", "m_y", "m")


@dataclass(frozen=True)
class LYInput:
    w_x: int
    w_y: int
    a_x: int
    a_y: int
    e: tuple[int, ...]
    kappa: int
    s: int
    m_x: int
    m_y: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))
        if self.w_x < 1 or self.w_y < 1 or math.gcd(self.w_x, self.w_y) != 1:
            raise InvalidLYInput("weights w_x, w_y must be coprime positive integers")
        if self.a_x < 0 or self.a_y < 0 or self.m_x < 0 or self.m_y < 0:
            raise InvalidLYInput("a_x, a_y, m_x, m_y must be nonnegative")
        if not self.e or any(x < 1 for x in self.e):
            raise InvalidLYInput("e must be a nonempty list of positive integers")
        if self.kappa < 1 or self.s < 1 or self.m < 1:
            raise InvalidLYInput("kappa, s and m must be positive")
        if gcd_many((self.kappa, self.a_x, self.a_y, *self.e)) != 1:
            raise InvalidLYInput("gcd(kappa, a_x, a_y, e_1, ..., e_r) must be 1")
        if self.nu0 % self.kappa:
            raise InvalidLYInput(f"nu0 = {self.nu0} is not divisible by kappa = {self.kappa}")

    @property
    def r(self) -> int:
        return len(self.e)

    @property
    def k(self) -> int:
        return self.s * self.kappa

    @property
    def e_total(self) -> int:
        return sum(self.e)

    @property
    def nu0(self) -> int:
        return self.w_x * self.a_x + self.w_y * self.a_y + self.w_x * self.w_y * self.e_total

    @classmethod
    def from_json(cls, data: Mapping) -> "LYInput":
        missing = [f for f in LY_FIELDS if f not in data]
        if missing:
            raise InvalidLYInput(f"missing fields: {', '.join(missing)}")
        extra = sorted(set(data) - set(LY_FIELDS) - {"k"})
        if extra:
            raise InvalidLYInput(f"unknown fields: {', '.join(extra)}")
        kw = {f: data[f] for f in LY_FIELDS}
        kw["e"] = tuple(kw["e"])
        inp = cls(**kw)
        if "k" in data and data["k"] != inp.k:
            raise InvalidLYInput(f"k = {data['k']} differs from s * kappa = {inp.k}")
        return inp

    def to_json(self) -> dict:
        return {f: (list(self.e) if f == "e" else getattr(self, f)) for f in LY_FIELDS}


@dataclass(frozen=True)
class LYDerived:
    nu0: int
    w_z: int
    m_omega: int
    u: int
    v: int
    c: int
    e0: int
    e_inf: int
    delta: int
    delta_omega: int
    d: int
    beta1: int
    beta2: int
    m_hat: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def derive(inp: LYInput) -> LYDerived:
    nu0 = inp.nu0
    w_z = nu0 // inp.kappa
    m_omega = inp.w_x * inp.m_x + inp.w_y * inp.m_y + w_z
    bz = bezout(inp.w_x, inp.w_y)
    u, v = bz.u, bz.v
    c = v * inp.m_x - u * inp.m_y
    e = inp.e_total
    e0 = v * inp.a_x - u * inp.a_y - u * inp.w_x * e + inp.kappa * c
    e_inf = u * inp.a_y - v * inp.a_x - v * inp.w_y * e - inp.kappa * c
    if e0 + e_inf != -e:
        raise ArithmeticError("e0 + e_inf must equal -e")
    delta = inp.m + inp.k
    delta_omega = gcd_many((m_omega, e0, e_inf, *inp.e))
    if math.gcd(delta_omega, inp.kappa) != 1:
        raise InvalidLYInput(f"gcd(delta_omega={delta_omega}, kappa={inp.kappa}) != 1")
    bz2 = bezout(delta_omega, inp.kappa)
    return LYDerived(
        nu0=nu0,
        w_z=w_z,
        m_omega=m_omega,
        u=u,
        v=v,
        c=c,
        e0=e0,
        e_inf=e_inf,
        delta=delta,
        delta_omega=delta_omega,
        d=m_omega * delta,
        beta1=bz2.u,
        beta2=bz2.v,
        m_hat=bz2.v * delta - inp.s,
    )


def index_labels(r: int) -> list[str]:
    """Names of the special fibers in surface order: ``A1`` is ``A_0``, ``A{r+2}`` is ``A_inf``."""
    return ["0", *(str(i) for i in range(1, r + 1)), "inf"]


@dataclass(frozen=True)
class LYOutput:
    derived: LYDerived
    quadric: FakeQuadric
    D_S: Divisor
    cover: CoverSpec
    charpoly: CycPoly
    labels: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "derived": self.derived.to_json(),
            "quadric": self.quadric.to_json(),
            "fiber_labels": {f"A{j}": f"A_{lbl}" for j, lbl in enumerate(self.labels, start=1)},
            "D_S": self.D_S.to_json(),
            "cover": {
                "d": self.cover.d,
                "D": self.cover.D.to_json(),
                "H": self.cover.H.to_json(),
            },
            "charpoly": self.charpoly.to_json(),
        }


def _exponents(inp: LYInput, der: LYDerived) -> list[int]:
    return [der.e0, *inp.e, der.e_inf]


def build_surface(inp: LYInput) -> LYOutput:
    """Fake quadric over ``I = {0, 1..r, inf}``, the divisor ``D_S`` and the horizontal cover.

    The curve ``Z = {z = 0}`` plays the role of ``C``.
    """
    der = derive(inp)
    kappa = inp.kappa
    pairs = []
    for ei in _exponents(inp, der):
        g = math.gcd(kappa, ei)
        pairs.append((kappa // g, ei // g))
    S = FakeQuadric(tuple(pairs), allow_smooth=True)
    if S.alpha != 0:
        raise AlphaNotZero(f"sum q_i/d_i = {S.alpha}")
    if lcm_many(S.ds) != kappa:
        raise LcmMismatch(f"lcm d_i = {lcm_many(S.ds)} differs from kappa = {kappa}")
    gs = {G(str(j)): 1 for j in range(1, inp.s + 1)}
    terms = {A(i): der.delta * q for i, (_d, q) in enumerate(pairs, start=1)}
    D_S = Divisor({**terms, C: inp.m, E: -der.delta, **gs})
    D_h = Divisor({C: inp.m, E: -der.delta, **gs})
    H_h = Divisor({C: der.beta1, E: -der.beta1})
    cover = CoverSpec(S, der.delta * der.delta_omega, D_h, H_h)
    assert is_principal(S, D_S) and is_principal(S, cover.D_tilde)
    return LYOutput(der, S, D_S, cover, monodromy_charpoly(inp, der), tuple(index_labels(inp.r)))


def cover_spec(inp: LYInput) -> CoverSpec:
    return build_surface(inp).cover


def monodromy_charpoly(inp: LYInput, der: LYDerived | None = None) -> CycPoly:
    der = der or derive(inp)
    dd = der.delta * der.delta_omega
    g = math.gcd(inp.m, inp.s * der.delta_omega)
    poly = CycPoly({1: 2 - inp.s}) * CycPoly({dd: inp.s}) / CycPoly({der.delta: 1}) / CycPoly({g: 1})
    if not poly.is_polynomial():
        raise ArithmeticError("monodromy characteristic polynomial has negative root multiplicity")
    return poly


def primitive_vertical(inp: LYInput) -> P1Cover:
    der = derive(inp)
    branch = [("0", der.m_hat)]
    branch += [(f"g{j}", 1) for j in range(1, inp.s + 1)]
    branch.append(("inf", -(inp.s + der.m_hat)))
    return P1Cover(der.delta * der.delta_omega, tuple(branch))
