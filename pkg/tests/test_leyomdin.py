import math

import pytest
from hypothesis import given, settings

from fakequadric.classgroup import is_principal
from fakequadric.cover import eigen_report, restrict_to, split_general, CoverSpec
from fakequadric.errors import InvalidLYInput
from fakequadric.leyomdin import (
    LYInput,
    build_surface,
    derive,
    index_labels,
    monodromy_charpoly,
    primitive_vertical,
)
from fakequadric.p1cover import CycPoly, alexander, components
from fakequadric.surface import A, C, E
from strategies import ly_inputs

DESK = LYInput(w_x=1, w_y=2, a_x=0, a_y=1, e=(1,), kappa=1, s=1, m_x=0, m_y=0, m=1)


def test_unweighted_bezout_rule():
    inp = LYInput(1, 1, 1, 1, (1,), 3, 2, 1, 2, 1)
    der = derive(inp)
    assert (der.u, der.v) == (1, 0)
    assert der.m_omega == inp.m_x + inp.m_y + der.w_z


def test_desk_instance():
    der = derive(DESK)
    assert (der.nu0, der.w_z, der.m_omega) == (4, 4, 4)
    assert (der.u, der.v, der.c) == (1, 0, 0)
    assert (der.e0, der.e_inf) == (-2, 1)
    assert (der.delta, der.delta_omega, der.d) == (2, 1, 8)
    assert der.m_hat == der.beta2 * der.delta - DESK.s
    out = build_surface(DESK)
    assert out.quadric.pairs == ((1, -2), (1, 1), (1, 1))
    assert out.charpoly == CycPoly.one()
    assert out.D_S.get(A(1)) == der.delta * der.e0


def test_second_instance_has_nontrivial_monodromy():
    inp = LYInput(1, 1, 1, 1, (1,), 3, 2, 1, 0, 1)
    out = build_surface(inp)
    assert out.quadric.kappa == 3
    assert out.charpoly == CycPoly.from_cyclotomic({7: 1})
    assert out.charpoly == split_general(out.cover).delta


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(w_x=2, w_y=4),
        dict(w_x=0),
        dict(a_x=-1),
        dict(e=()),
        dict(e=(0,)),
        dict(kappa=0),
        dict(s=0),
        dict(m=0),
        dict(kappa=3),
    ],
)
def test_invalid_inputs(kwargs):
    base = DESK.to_json() | {"e": DESK.e}
    with pytest.raises(InvalidLYInput):
        LYInput(**(base | kwargs))


def test_json_round_trip_and_schema():
    assert LYInput.from_json(DESK.to_json()) == DESK
    with pytest.raises(InvalidLYInput):
        LYInput.from_json({k: v for k, v in DESK.to_json().items() if k != "m"})
    with pytest.raises(InvalidLYInput):
        LYInput.from_json(DESK.to_json() | {"bogus": 1})
    with pytest.raises(InvalidLYInput):
        LYInput.from_json(DESK.to_json() | {"k": 7})
    assert LYInput.from_json(DESK.to_json() | {"k": 1}) == DESK


def test_index_labels():
    assert index_labels(2) == ["0", "1", "2", "inf"]


def test_rational_case_has_trivial_monodromy():
    inp = LYInput(1, 1, 1, 1, (1,), 1, 1, 0, 0, 2)
    assert derive(inp).delta_omega == 1
    assert monodromy_charpoly(inp) == CycPoly.one()


@settings(max_examples=80, deadline=None)
@given(ly_inputs())
def test_derived_identities(inp):
    der = derive(inp)
    assert der.u * inp.w_x + der.v * inp.w_y == 1
    assert der.e0 + der.e_inf == -inp.e_total
    assert der.m_omega % der.delta_omega == 0
    assert math.gcd(der.delta_omega, inp.kappa) == 1
    assert der.beta1 * der.delta_omega + der.beta2 * inp.kappa == 1


@settings(max_examples=80, deadline=None)
@given(ly_inputs())
def test_surface_invariants(inp):
    out = build_surface(inp)
    S, der = out.quadric, out.derived
    assert S.alpha == 0
    assert math.lcm(*S.ds) == inp.kappa
    assert math.gcd(inp.kappa, der.e0, der.e_inf, *inp.e) == 1
    assert is_principal(S, out.D_S)
    assert is_principal(S, out.cover.D - out.cover.H * out.cover.d)
    assert out.D_S.get(C) == inp.m and out.D_S.get(E) == -der.delta
    for i, (_d, q) in enumerate(S.pairs, start=1):
        assert out.D_S.get(A(i)) == der.delta * q


@settings(max_examples=80, deadline=None)
@given(ly_inputs())
def test_three_way_monodromy_agreement(inp):
    out = build_surface(inp)
    assert out.charpoly.is_polynomial()
    assert out.charpoly == alexander(primitive_vertical(inp)) == split_general(out.cover).delta
    if out.cover.d <= 40:
        assert eigen_report(out.cover).charpoly == out.charpoly


@settings(max_examples=80, deadline=None)
@given(ly_inputs())
def test_primitive_vertical_preimages(inp):
    der = derive(inp)
    cov = primitive_vertical(inp)
    dd = der.delta * der.delta_omega
    assert components(cov) == 1
    assert math.gcd(dd, inp.s + der.m_hat) == der.delta
    assert math.gcd(dd, der.m_hat) == math.gcd(inp.s * der.delta_omega, inp.m)


@settings(max_examples=60, deadline=None)
@given(ly_inputs())
def test_blowup_multiplicities_from_restrictions(inp):
    out = build_surface(inp)
    der = out.derived
    dd = der.delta * der.delta_omega
    spec = CoverSpec(out.quadric, dd, out.D_S)
    for i, (d, q) in enumerate(out.quadric.pairs, start=1):
        if d == 1:
            continue
        # weight of the blow-up at A_i ∩ C: q' with q q' ≡ -1 (mod d)
        q_neg = (-pow(q, -1, d)) % d or d
        h = (q * q_neg + 1) // d
        mult = dict(restrict_to(spec, A(i)).branch)["P"]
        assert (der.delta * q * q_neg + inp.m) % d == 0
        assert (mult - (der.delta * q * q_neg + inp.m) // d) % dd == 0
        assert (mult - (der.delta * h - inp.s * inp.kappa // d)) % dd == 0
