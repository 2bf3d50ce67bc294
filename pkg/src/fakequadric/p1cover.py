"""Cyclic branched covers of the projective line and products of ``t^n - 1``."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import frac, gcd_many
from .errors import InvalidCover


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    """Divide by a monic polynomial, insisting on a zero remainder (coefficients low to high)."""
    a = a[:]
    db = len(b) - 1
    if len(a) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        coef = a[k + db]
        q[k] = coef
        if coef:
            for j, y in enumerate(b):
                a[k + j] -= coef * y
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


def _t_n_minus_1(n: int) -> list[int]:
    return [-1] + [0] * (n - 1) + [1]


@dataclass(frozen=True, eq=False)
class CycPoly:
    """``prod (t^n - 1)^{e_n}``; equality compares root multiplicities, not the factor list."""

    factors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for n, e in dict(self.factors).items():
            n, e = int(n), int(e)
            if n < 1:
                raise ValueError(f"factor index must be positive, got {n}")
            if e:
                clean[n] = clean.get(n, 0) + e
        object.__setattr__(self, "factors", {n: e for n, e in sorted(clean.items()) if e})

    @classmethod
    def one(cls) -> "CycPoly":
        return cls({})

    @classmethod
    def from_cyclotomic(cls, exps: Mapping[int, int]) -> "CycPoly":
        """Build from exponents of cyclotomic polynomials ``Phi_o``."""
        out: Counter = Counter()
        for o, m in exps.items():
            if m:
                for k in _divisors(o):
                    mu = _mobius(o // k)
                    if mu:
                        out[k] += mu * m
        return cls(out)

    @classmethod
    def from_root_multiplicities(cls, d: int, mult: Sequence[int]) -> "CycPoly":
        """Build from multiplicities of ``zeta_d^k`` for ``k = 0..d-1``.

        The multiplicity must be constant on roots of equal order.
        """
        if len(mult) != d:
            raise ValueError("need one multiplicity per d-th root of unity")
        exps: dict[int, int] = {}
        for k in range(d):
            o = d // math.gcd(d, k)
            if o in exps:
                if exps[o] != mult[k]:
                    raise ValueError(f"multiplicities differ on primitive {o}-th roots")
            else:
                exps[o] = mult[k]
        return cls.from_cyclotomic(exps)

    def cyclotomic_exponents(self) -> dict[int, int]:
        """Exponent of each ``Phi_o``; the canonical form used for equality."""
        out: Counter = Counter()
        for n, e in self.factors.items():
            for o in _divisors(n):
                out[o] += e
        return {o: m for o, m in sorted(out.items()) if m}

    def root_multiplicity(self, N: int, k: int) -> int:
        o = N // math.gcd(N, k % N if N else 0)
        return sum(e for n, e in self.factors.items() if n % o == 0)

    def degree(self) -> int:
        return sum(n * e for n, e in self.factors.items())

    def is_polynomial(self) -> bool:
        return all(m >= 0 for m in self.cyclotomic_exponents().values())

    def coefficients(self) -> list[int]:
        """Expanded integer coefficients, lowest degree first."""
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        num = [1]
        for n, e in self.factors.items():
            for _ in range(max(e, 0)):
                num = _poly_mul(num, _t_n_minus_1(n))
        for n, e in self.factors.items():
            for _ in range(max(-e, 0)):
                num = _poly_div_exact(num, _t_n_minus_1(n))
        return num

    def __mul__(self, other: "CycPoly") -> "CycPoly":
        return CycPoly(_add(self.factors, other.factors))

    def __truediv__(self, other: "CycPoly") -> "CycPoly":
        return CycPoly(_add(self.factors, {n: -e for n, e in other.factors.items()}))

    def __pow__(self, k: int) -> "CycPoly":
        return CycPoly({n: e * k for n, e in self.factors.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.cyclotomic_exponents() == other.cyclotomic_exponents()

    def __hash__(self) -> int:
        return hash(tuple(self.cyclotomic_exponents().items()))

    def __repr__(self) -> str:
        return f"CycPoly({self.factors})"

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"(t^{n}-1)" + (f"^{e}" if e != 1 else "") for n, e in self.factors.items())

    def cyclotomic_str(self) -> str:
        exps = self.cyclotomic_exponents()
        if not exps:
            return "1"
        return "*".join(f"Phi{o}" + (f"^{m}" if m != 1 else "") for o, m in exps.items())

    def to_json(self) -> dict:
        out: dict = {
            "factors": [{"n": n, "exp": e} for n, e in self.factors.items()],
            "cyclotomic": [{"n": o, "exp": m} for o, m in self.cyclotomic_exponents().items()],
            "degree": self.degree(),
        }
        if self.is_polynomial():
            out["coefficients"] = self.coefficients()
        return out


def _add(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out = dict(a)
    for n, e in b.items():
        out[n] = out.get(n, 0) + e
    return out


@dataclass(frozen=True)
class P1Cover:
    """A ``d``-sheeted cyclic cover of P^1 branched with multiplicity ``m_j`` at labelled points."""

    d: int
    branch: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.d < 1:
            raise InvalidCover(f"sheet count must be positive, got {self.d}")
        branch = tuple((str(lbl), int(m)) for lbl, m in self.branch)
        labels = [lbl for lbl, _ in branch]
        if len(set(labels)) != len(labels):
            raise InvalidCover("branch labels must be distinct")
        if sum(m for _, m in branch) % self.d:
            raise InvalidCover("branch multiplicities must sum to a multiple of d")
        object.__setattr__(self, "branch", branch)

    @classmethod
    def from_mults(cls, d: int, mults: Iterable[int]) -> "P1Cover":
        return cls(d, tuple((f"p{j}", m) for j, m in enumerate(mults, start=1)))

    @property
    def mults(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.branch)

    @property
    def h(self) -> int:
        return sum(self.mults) // self.d

    @property
    def n(self) -> int:
        return gcd_many((self.d, *self.mults))

    def reduced(self, tau: int) -> "P1Cover":
        """Same branch points, multiplicities reduced into ``[0, tau)``."""
        return P1Cover(tau, tuple((lbl, m % tau) for lbl, m in self.branch))

    def to_json(self) -> dict:
        return {"d": self.d, "branch": [{"label": lbl, "m": m} for lbl, m in self.branch]}


def h1_eigen(cov: P1Cover, l: int) -> int:
    """Dimension of the ``zeta_d^l`` eigenspace of ``H^1`` of the structure sheaf."""
    d_hat = cov.d // cov.n
    if l % d_hat == 0:
        return 0
    value = -1 + sum(frac(Fraction(l * m, cov.d)) for m in cov.mults)
    assert value.denominator == 1 and value >= 0
    return int(value)


def eigen_dims(cov: P1Cover) -> list[int]:
    return [h1_eigen(cov, l) for l in range(cov.d)]


def genus(cov: P1Cover) -> int:
    return sum(eigen_dims(cov))


def components(cov: P1Cover) -> int:
    return cov.n


def alexander(cov: P1Cover) -> CycPoly:
    s = len(cov.branch)
    if s < 1:
        raise InvalidCover("the Alexander polynomial needs at least one branch point")
    factors = _add({cov.n: 2}, {cov.d: s - 2})
    for m in cov.mults:
        factors = _add(factors, {math.gcd(cov.d, m): -1})
    return CycPoly(factors)


def zeta_alexander(r: int, e: int, chi_open: int, preimage_counts: Sequence[int]) -> CycPoly:
    """Monodromy zeta of an ``e``-sheeted cyclic cover with ``r`` components over an open surface."""
    factors = _add({r: 2}, {e: -chi_open})
    for mu in preimage_counts:
        factors = _add(factors, {mu: -1})
    return CycPoly(factors)


def holomorphic_eigenvalues(d: int, dims: Sequence[int]) -> dict[Fraction, int]:
    """Eigenvalues ``exp(2 pi i x)`` on holomorphic ``H^1``, keyed by ``x = l/d`` with multiplicity."""
    return {Fraction(l, d): k for l, k in enumerate(dims) if k}


def cover_holomorphic_eigenvalues(cov: P1Cover) -> dict[Fraction, int]:
    return holomorphic_eigenvalues(cov.d, eigen_dims(cov))


def charpoly_from_dims(d: int, dims: Sequence[int]) -> CycPoly:
    """Characteristic polynomial on ``H^1(C)`` from holomorphic eigenspace dimensions."""
    return CycPoly.from_root_multiplicities(d, [dims[l] + dims[(-l) % d] for l in range(d)])
