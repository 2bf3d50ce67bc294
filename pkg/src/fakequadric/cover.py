"""Cyclic covers ``(d, D, H)`` of a fake quadric: eigenspaces, restrictions and splitting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import gcd_many
from .classgroup import (
    GENERIC_FIBER,
    CanonicalClass,
    canonical_form,
    is_principal,
    torsion_generator,
    torsion_order,
    vertical_representative,
)
from .cohomology import betti
from .errors import (
    ComponentCountAmbiguous,
    NotHorizontal,
    NotLinearlyEquivalent,
    RestrictionError,
    SlantedUnsupported,
)
from .p1cover import CycPoly, P1Cover, alexander, charpoly_from_dims, holomorphic_eigenvalues
from .surface import A, C, Curve, Divisor, E, FakeQuadric

HYPOTHESIS_UNVERIFIED = "hypothesis-unverified"


@dataclass(frozen=True)
class CoverSpec:
    """Data ``(d, D, H)`` with ``D ~ dH``.

    ``qnc_asserted`` records the caller's claim that ``D`` mod ``d`` has
    Q-normal crossings; it is never inferred.
    """

    S: FakeQuadric
    d: int
    D: Divisor
    H: Divisor = field(default_factory=Divisor)
    qnc_asserted: bool = True

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"cover degree must be positive, got {self.d}")
        self.S.check_divisor(self.D)
        self.S.check_divisor(self.H)

    @property
    def D_tilde(self) -> Divisor:
        return self.D - self.H * self.d

    def to_json(self) -> dict:
        return {
            "surface": self.S.to_json(),
            "d": self.d,
            "D": self.D.to_json(),
            "H": self.H.to_json(),
            "qnc_asserted": self.qnc_asserted,
        }


def validate(spec: CoverSpec) -> Divisor:
    """Return ``D - dH`` after checking it is principal."""
    Dt = spec.D_tilde
    if not is_principal(spec.S, Dt):
        raise NotLinearlyEquivalent(f"D is not linearly equivalent to {spec.d}*H")
    return Dt


def L_divisor(spec: CoverSpec, l: int) -> Divisor:
    """``sum floor(l m_i / d) D_i`` over the components of ``D - dH``."""
    Dt = spec.D_tilde
    return Divisor({c: (l * m) // spec.d for c, m in Dt.items()})


def L_class(spec: CoverSpec, l: int) -> CanonicalClass:
    if not 0 <= l < spec.d:
        raise ValueError(f"l must lie in [0, {spec.d})")
    return canonical_form(spec.S, L_divisor(spec, l))


@dataclass(frozen=True)
class EigenReport:
    d: int
    dims: tuple[int, ...]
    h1_total: int
    charpoly: CycPoly
    tags: tuple[str, ...] = ()

    @property
    def holomorphic_eigenvalues(self) -> dict[Fraction, int]:
        return holomorphic_eigenvalues(self.d, self.dims)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "dims": {str(l): k for l, k in enumerate(self.dims)},
            "h1_total": self.h1_total,
            "charpoly": self.charpoly.to_json(),
            "holomorphic_eigenvalues": {str(x): k for x, k in self.holomorphic_eigenvalues.items()},
            "tags": list(self.tags),
        }


def eigen_report(spec: CoverSpec) -> EigenReport:
    validate(spec)
    dims = tuple(betti(spec.S, L_divisor(spec, l)).h1 for l in range(spec.d))
    tags = () if spec.qnc_asserted else (HYPOTHESIS_UNVERIFIED,)
    return EigenReport(spec.d, dims, sum(dims), charpoly_from_dims(spec.d, dims), tags)


# --- local data at the singular points ---------------------------------------


def _exceptional(m_a: int, w_a: int, m_o: int, w_o: int, d: int) -> int:
    """Coefficient of the special blow-up exceptional curve: ``(w_a m_a + w_o m_o) / d``."""
    num = w_a * m_a + w_o * m_o
    if num % d:
        raise RestrictionError("divisor is not Cartier at a singular point")
    return num // d


def _exc_on_section(S: FakeQuadric, i: int, m_a: int, m_sec: int, section: str) -> int:
    """Exceptional coefficient seen from ``E`` (at ``Q_i``) or ``C`` (at ``P_i``)."""
    d, q = S.pairs[i - 1]
    if d == 1:
        return m_a
    w = q % d if section == "E" else (-q) % d
    return _exceptional(m_a, 1, m_sec, w, d)


def _exc_on_fiber(S: FakeQuadric, i: int, m_a: int, m_sec: int, section: str) -> int:
    """Exceptional coefficient seen from ``A_i`` at ``Q_i`` or ``P_i``."""
    d, q = S.pairs[i - 1]
    if d == 1:
        return m_sec
    w = pow(q if section == "E" else -q, -1, d)
    return _exceptional(m_a, w, m_sec, 1, d)


def restrict_to(spec: CoverSpec, curve) -> P1Cover:
    """Branch data of the cover over the strict transform of ``curve``.

    ``curve`` is ``C``, ``E``, ``A_i`` or a labelled fiber; its own coefficient in
    ``D - dH`` must be divisible by ``d``.
    """
    S, d = spec.S, spec.d
    if isinstance(curve, str):
        curve = Curve.parse(curve)
    S.check_curve(curve)
    if curve.kind == "G":
        raise RestrictionError("restriction to G is not modelled (G is not rational)")
    Dt = validate(spec)
    if Dt.get(curve) % d:
        raise RestrictionError(f"{curve} carries coefficient {Dt.get(curve)} not divisible by {d}")
    branch: list[tuple[str, int]] = []
    fibers = [(c, m) for c, m in Dt.items() if c.kind == "F"]
    gs = [(c, m) for c, m in Dt.items() if c.kind == "G"]
    if curve.kind in ("C", "E"):
        m_sec = Dt.get(curve)
        for i in range(1, S.r + 1):
            branch.append((f"A{i}", _exc_on_section(S, i, Dt.get(A(i)), m_sec, curve.kind)))
        branch.extend((str(c), m) for c, m in fibers)
    elif curve.kind == "F":
        branch.append(("C", Dt.get(C)))
        branch.append(("E", Dt.get(E)))
        for c, m in gs:
            branch.extend((f"{c}#{k}", m) for k in range(1, S.kappa + 1))
    else:
        i = curve.index
        m_a = Dt.get(curve)
        branch.append(("P", _exc_on_fiber(S, i, m_a, Dt.get(C), "C")))
        branch.append(("Q", _exc_on_fiber(S, i, m_a, Dt.get(E), "E")))
        for c, m in gs:
            branch.extend((f"{c}#{k}", m) for k in range(1, S.kappa // S.d(i) + 1))
    return P1Cover(d, tuple(branch))


def connected_components(spec: CoverSpec) -> int:
    """``gcd`` of ``d`` and every coefficient of the pull-back of ``D - dH``.

    Each singular point admits two special blow-ups; both are evaluated and a
    disagreement raises ``ComponentCountAmbiguous``.
    """
    S, d = spec.S, spec.d
    Dt = validate(spec)
    g0 = gcd_many((d, *Dt.values()))
    total = g0
    for i in range(1, S.r + 1):
        if S.d(i) == 1:
            continue
        m_a = Dt.get(A(i))
        for sec in ("C", "E"):
            m_s = Dt.get(C if sec == "C" else E)
            x = _exc_on_section(S, i, m_a, m_s, sec)
            y = _exc_on_fiber(S, i, m_a, m_s, sec)
            if math.gcd(g0, x) != math.gcd(g0, y):
                raise ComponentCountAmbiguous(
                    f"blow-ups at {'P' if sec == 'C' else 'Q'}{i} give gcds "
                    f"{math.gcd(g0, x)} and {math.gcd(g0, y)}"
                )
            total = math.gcd(total, x)
    return total


# --- splitting into vertical and horizontal parts -----------------------------


def _is_horizontal(curve: Curve) -> bool:
    return curve.kind in ("C", "E", "G")


@dataclass(frozen=True)
class HorizontalReduction:
    gamma: int
    eta: int
    c_prime: int
    e_prime: int
    g: tuple[tuple[str, int], ...]
    T_prime: Divisor
    d_tau: int
    tau: int
    n: int
    h: int

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "eta": self.eta,
            "c_prime": self.c_prime,
            "e_prime": self.e_prime,
            "g": {lbl: m for lbl, m in self.g},
            "T_prime": self.T_prime.to_json(),
            "d_tau": self.d_tau,
            "tau": self.tau,
            "n": self.n,
            "h": self.h,
        }


def _multiples(S: FakeQuadric, D: Divisor, order: int) -> list[CanonicalClass]:
    return [canonical_form(S, D * k) for k in range(order)]


def horizontal_reduce(spec: CoverSpec) -> HorizontalReduction:
    """Write ``H ~ gamma C + eta E + T'`` with ``<T'>`` meeting ``<T>`` only in 0.

    Among the admissible ``eta = eta_0 + h kappa_1`` the smallest ``h >= 0`` is taken.
    """
    S, d, D, H = spec.S, spec.d, spec.D, spec.H
    if any(not _is_horizontal(c) for c in D):
        raise NotHorizontal("D has vertical components")
    validate(spec)
    kappa = S.kappa
    c, e = D.get(C), D.get(E)
    gs = tuple((str(cv), m) for cv, m in D.items() if cv.kind == "G")
    total_g = sum(m for _, m in gs)
    g_dk = math.gcd(d, kappa)
    kappa1 = kappa // g_dk
    if e % g_dk:
        raise NotHorizontal("E coefficient incompatible with d and kappa")
    # least eta_0 >= 0 with d * eta_0 = e (mod kappa)
    eta0 = next(x for x in range(kappa1) if (d * x - e) % kappa == 0) if kappa1 else 0
    degree = c + e + kappa * total_g
    assert degree % d == 0
    T = torsion_generator(S)
    t_mults = {cc for cc in _multiples(S, T, kappa)}
    for h in range(g_dk):
        eta = eta0 + h * kappa1
        gamma = degree // d - eta
        T_h = H - Divisor({C: gamma, E: eta})
        order = torsion_order(S, T_h)
        assert order is not None
        multiples = _multiples(S, T_h, order)
        if all(m not in t_mults for m in multiples[1:]):
            break
    else:  # pragma: no cover - existence is a theorem
        raise ArithmeticError("no admissible torsion part found")
    c_prime, rem_c = divmod(c - d * gamma, kappa)
    e_prime, rem_e = divmod(e - d * eta, kappa)
    assert rem_c == 0 and rem_e == 0
    n = gcd_many((d, c, e, *(m for _, m in gs)))
    return HorizontalReduction(
        gamma=gamma,
        eta=eta,
        c_prime=c_prime,
        e_prime=e_prime,
        g=gs,
        T_prime=T_h,
        d_tau=order,
        tau=d // order,
        n=n,
        h=h,
    )


def gcv_cover(spec: CoverSpec, reduction: Optional[HorizontalReduction] = None) -> P1Cover:
    """Greatest common vertical cover: degree ``tau``, branched at 0, infinity and the G points."""
    red = reduction or horizontal_reduce(spec)
    tau = red.tau
    branch = [("0", red.c_prime % tau), ("inf", red.e_prime % tau)]
    branch.extend((lbl, m % tau) for lbl, m in red.g)
    return P1Cover(tau, tuple(branch))


@dataclass(frozen=True)
class SplitReport:
    nu_h: int
    nu_v: int
    nu_s: int
    d_v: int
    d_h: int
    mu0: int
    vertical_cover: P1Cover
    gcv_cover: Optional[P1Cover]
    reduction: Optional[HorizontalReduction]
    delta1: CycPoly
    delta2h: CycPoly
    delta2m: CycPoly
    delta: CycPoly

    def to_json(self) -> dict:
        return {
            "nu_h": self.nu_h,
            "nu_v": self.nu_v,
            "nu_s": self.nu_s,
            "d_v": self.d_v,
            "d_h": self.d_h,
            "mu0": self.mu0,
            "vertical_cover": self.vertical_cover.to_json(),
            "gcv_cover": self.gcv_cover.to_json() if self.gcv_cover else None,
            "reduction": self.reduction.to_json() if self.reduction else None,
            "delta1": self.delta1.to_json(),
            "delta2h": self.delta2h.to_json(),
            "delta2m": self.delta2m.to_json(),
            "delta": self.delta.to_json(),
        }


def _vertical_restriction(S: FakeQuadric, d: int, D_v: Divisor, H_v: Divisor) -> P1Cover:
    """Restriction to ``E`` of the vertical cover ``(d, D_v, H_v)``.

    ``H_v`` is replaced by a vertical representative chosen so that the
    multiplicities at the points ``A_i ∩ E`` lie in ``[0, d)``.
    """
    rep = vertical_representative(S, H_v)
    shift = Divisor()
    for i, (d_i, _q) in enumerate(S.pairs, start=1):
        x = D_v.get(A(i)) - d * rep.get(A(i))
        k = (x // d_i) // d
        shift = shift + Divisor({A(i): k * d_i, GENERIC_FIBER: -k})
    return restrict_to(CoverSpec(S, d, D_v, rep + shift), E)


def split_general(spec: CoverSpec) -> SplitReport:
    S, d, D, H = spec.S, spec.d, spec.D, spec.H
    validate(spec)
    slanted = [c for c in D if c.kind not in ("C", "E", "G", "A", "F")]
    if slanted:
        raise SlantedUnsupported(f"slanted components {slanted}")
    hor = D.filter(lambda c: _is_horizontal(c))
    ver = D.filter(lambda c: not _is_horizontal(c))
    nu_h, nu_v, nu_s = hor.coefficient_gcd(), ver.coefficient_gcd(), 0
    d_v = gcd_many((d, nu_h, nu_s))
    d_h = gcd_many((d, nu_v, nu_s))
    mu0 = gcd_many((d, nu_h, nu_v, nu_s))

    # vertical part: d_v H_v = d H - hor ~ ver
    H_v = H * (d // d_v) - Divisor({c: m // d_v for c, m in hor.items()})
    vertical = _vertical_restriction(S, d_v, ver, H_v)
    delta1 = alexander(vertical)

    # mixed part: the torsion class (d/mu0) H - D/mu0
    H_m = H * (d // mu0) - Divisor({c: m // mu0 for c, m in D.items()})
    delta2m = alexander(_vertical_restriction(S, mu0, Divisor(), H_m))

    reduction = gcv = None
    delta2h = CycPoly.one()
    if hor:
        H_h = H * (d // d_h) - Divisor({c: m // d_h for c, m in ver.items()})
        reduction = horizontal_reduce(CoverSpec(S, d_h, hor, H_h))
        gcv = gcv_cover(CoverSpec(S, d_h, hor, H_h), reduction)
        delta2h = alexander(gcv)
    return SplitReport(
        nu_h=nu_h,
        nu_v=nu_v,
        nu_s=nu_s,
        d_v=d_v,
        d_h=d_h,
        mu0=mu0,
        vertical_cover=vertical,
        gcv_cover=gcv,
        reduction=reduction,
        delta1=delta1,
        delta2h=delta2h,
        delta2m=delta2m,
        delta=delta1 * delta2h,
    )
