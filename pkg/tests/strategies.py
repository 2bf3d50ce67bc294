"""Hypothesis strategies built on the seeded generators."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from fakequadric.surface import FakeQuadric
from generators import random_cover_spec, random_divisor, random_principal, random_surface

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def surfaces(draw, max_r: int = 4, max_d: int = 8):
    # seeded rejection sampling keeps hypothesis from discarding draws
    return random_surface(random.Random(draw(seeds)), max_r=max_r, max_d=max_d)


@st.composite
def surface_and_divisor(draw, bound: int = 6, kinds: str = "CEAFG"):
    S = draw(surfaces())
    rng = random.Random(draw(seeds))
    return S, random_divisor(rng, S, bound, kinds)


@st.composite
def surface_divisor_principal(draw, bound: int = 6):
    S, D = draw(surface_and_divisor(bound))
    rng = random.Random(draw(seeds))
    return S, D, random_principal(rng, S)


@st.composite
def cover_specs(draw, max_d: int = 30, kind: str | None = None):
    rng = random.Random(draw(seeds))
    S = random_surface(rng)
    chosen = kind or rng.choice(["vertical", "horizontal", "mixed"])
    return random_cover_spec(rng, S, chosen, max_d=max_d)


def torsion_divisor(S: FakeQuadric, coeffs: list[int], t: int):
    """A torsion divisor built from ``coeffs`` on the A_i plus ``t`` copies of ``E - C``."""
    from fakequadric.surface import A, C, Divisor, E, F

    a = [coeffs[i % len(coeffs)] for i in range(S.r)]
    s = sum((Fraction(x, d) for x, d in zip(a, S.ds)), Fraction(0))
    M = s.denominator
    D = Divisor({F(): -int(s * M), **{A(i): M * x for i, x in enumerate(a, start=1)}})
    return D + Divisor({E: t, C: -t})


@st.composite
def surface_and_torsion(draw):
    S = draw(surfaces())
    coeffs = draw(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
    return S, torsion_divisor(S, coeffs, draw(st.integers(-6, 6)))


@st.composite
def ly_inputs(draw):
    from generators import random_ly_input

    return random_ly_input(random.Random(draw(seeds)))
