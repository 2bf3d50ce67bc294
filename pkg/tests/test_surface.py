import math
from fractions import Fraction

import pytest
from hypothesis import given

from fakequadric.errors import InvalidOrder, NonCoprimePair, NonIntegralAlpha, UnknownCurve
from fakequadric.surface import (
    A,
    C,
    Curve,
    Divisor,
    E,
    F,
    FakeQuadric,
    G,
    canonical_divisor,
    genus_G,
    intersect,
    new_fake_quadric,
)
from strategies import surface_and_divisor, surfaces


@pytest.mark.parametrize(
    "pairs, alpha, kappa, chi",
    [
        ([(3, 1)] * 3, 1, 3, Fraction(0)),
        ([(3, 1), (3, 2), (3, 1), (3, 2)], 2, 3, Fraction(-2, 3)),
        ([(6, 5), (9, 1), (18, 1)], 1, 18, Fraction(-2, 3)),
    ],
)
def test_invariants_of_known_surfaces(pairs, alpha, kappa, chi):
    S = new_fake_quadric(pairs)
    assert (S.alpha, S.kappa, S.chi_orb) == (alpha, kappa, chi)


def test_genus_of_G():
    assert genus_G(new_fake_quadric([(3, 1)] * 3)) == 1
    assert genus_G(new_fake_quadric([(3, 1), (3, 2), (3, 1), (3, 2)])) == 2
    S = new_fake_quadric([(2, 1), (2, 1)])
    assert (S.alpha, S.chi_orb, S.kappa, genus_G(S)) == (1, 1, 2, 0)


def test_construction_errors():
    with pytest.raises(NonIntegralAlpha):
        new_fake_quadric([(3, 1), (3, 1)])
    with pytest.raises(NonCoprimePair):
        new_fake_quadric([(4, 2), (2, 1)])
    with pytest.raises(InvalidOrder):
        new_fake_quadric([(1, 0)])
    with pytest.raises(InvalidOrder):
        new_fake_quadric([])
    assert FakeQuadric(((1, 0),), allow_smooth=True).kappa == 1


def test_negative_q_is_accepted():
    S = new_fake_quadric([(3, -1), (3, 1)])
    assert S.alpha == 0


def test_intersection_examples():
    S = new_fake_quadric([(3, 1)] * 3)
    assert intersect(S, Divisor({C: 1}), Divisor({F(): 1})) == 1
    assert intersect(S, Divisor({G(): 1}), Divisor({F(): 1})) == 3
    D = Divisor({C: 1, F(): 1})
    assert intersect(S, D, D) == 2


def test_canonical_divisor():
    S = new_fake_quadric([(3, 1)] * 3)
    K = canonical_divisor(S)
    assert K == Divisor({C: -1, E: -1, F("K"): 1, A(1): -1, A(2): -1, A(3): -1})
    S = new_fake_quadric([(3, 1), (3, 2), (3, 1), (3, 2)])
    K = canonical_divisor(S)
    assert intersect(S, K, Divisor({F(): 1})) == -2
    assert intersect(S, K, Divisor({C: 1})) == Fraction(2, 3)


def test_curve_names_round_trip():
    for c in (C, E, A(3), F(), F("x"), G(), G("7")):
        assert Curve.parse(str(c)) == c
    with pytest.raises(UnknownCurve):
        Curve.parse("B1")
    with pytest.raises(UnknownCurve):
        new_fake_quadric([(3, 1)] * 3).check_curve(A(4))


def test_divisor_algebra():
    D = Divisor({C: 2, A(1): -1})
    assert D + D == D * 2
    assert D - D == Divisor()
    assert -D == D * -1
    assert Divisor.from_json(D.to_json()) == D
    assert Divisor({C: 0}) == Divisor()
    assert D.coefficient_gcd() == 1


@given(surfaces())
def test_surface_invariants(S):
    assert S.r >= 2
    assert math.prod(S.ds) % (S.kappa**2) == 0
    if S.r >= 2:
        for i in range(S.r):
            others = [d for j, d in enumerate(S.ds) if j != i]
            assert math.lcm(*others) % S.ds[i] == 0
    if S.r > 2:
        assert S.chi_orb <= 0 and genus_G(S) >= 1
    K = canonical_divisor(S)
    assert intersect(S, K, Divisor({F(): 1})) == -2
    assert intersect(S, K, Divisor({C: 1})) == -S.chi_orb


@given(surface_and_divisor(), surface_and_divisor())
def test_intersection_symmetric_bilinear(sd1, sd2):
    S, D1 = sd1
    _, D2 = sd2
    D2 = Divisor({c: m for c, m in D2.items() if c.kind != "A" or c.index <= S.r})
    assert intersect(S, D1, D2) == intersect(S, D2, D1)
    assert intersect(S, D1 + D1, D2) == 2 * intersect(S, D1, D2)
