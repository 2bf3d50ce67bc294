"""Replays of published worked examples, each reduced to named value checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .classgroup import canonical_form, group_structure, linearly_equivalent, torsion_generator, torsion_order
from .cohomology import betti
from .cover import (
    CoverSpec,
    L_divisor,
    connected_components,
    eigen_report,
    gcv_cover,
    horizontal_reduce,
    split_general,
)
from .p1cover import CycPoly, cover_holomorphic_eigenvalues, eigen_dims, genus
from .surface import A, C, Divisor, E, G, new_fake_quadric


@dataclass(frozen=True)
class Check:
    anchor: str
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "anchor": self.anchor,
            "check": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


def torsion_surface():
    return new_fake_quadric([(3, 1), (3, 2), (3, 1), (3, 2)])


def torsion_table_divisors() -> list[tuple[str, Divisor]]:
    D1 = Divisor({A(1): 1})
    D2 = Divisor({A(1): 2, A(2): -1})
    D3 = Divisor({A(1): 2, A(2): -1, A(3): 1, A(4): -1})
    three_c = Divisor({C: 3})
    return [
        ("D1", D1),
        ("D2", D2),
        ("D3", D3),
        ("3C+D1", three_c + D1),
        ("3C+D2", three_c + D2),
        ("3C+D3", three_c + D3),
    ]


TORSION_TABLE = {
    "D1": (1, 0, 0),
    "D2": (0, 0, 0),
    "D3": (0, 1, 0),
    "3C+D1": (2, 1, 0),
    "3C+D2": (0, 0, 0),
    "3C+D3": (1, 2, 0),
}


def _torsion_checks(anchor: str) -> list[Check]:
    S = torsion_surface()
    out = []
    for name, D in torsion_table_divisors():
        b = betti(S, D)
        for key, exp in zip(("h0", "h1", "h2"), TORSION_TABLE[name]):
            out.append(Check(anchor, f"{key}({name})", exp, getattr(b, key)))
    return out


def _class_group_checks(anchor: str) -> list[Check]:
    out = []
    cases = [([(3, 1)] * 3, [3, 3]), ([(3, 1), (3, 2), (3, 1), (3, 2)], [3, 3, 3])]
    for pairs, factors in cases:
        S = new_fake_quadric(pairs)
        gs = group_structure(S)
        tag = ",".join(f"({d},{q})" for d, q in pairs)
        out.append(Check(anchor, f"rank {tag}", 2, gs.rank))
        out.append(Check(anchor, f"factors {tag}", factors, list(gs.invariant_factors)))
        out.append(Check(anchor, f"order of T {tag}", S.kappa, torsion_order(S, torsion_generator(S))))
    return out


def r3_surface():
    return new_fake_quadric([(3, 1)] * 3)


def torsion_choice_spec(a: int, twist: bool = False) -> CoverSpec:
    """``(3, G, C - aT)``, optionally with ``A1 - A2`` added to ``H``."""
    S = r3_surface()
    H = Divisor({C: 1}) - torsion_generator(S) * a
    if twist:
        H = H + Divisor({A(1): 1, A(2): -1})
    return CoverSpec(S, 3, Divisor({G(): 1}), H)


def _torsion_choice_checks(anchor: str) -> list[Check]:
    out = []
    for a in range(3):
        spec = torsion_choice_spec(a)
        rep = eigen_report(spec)
        out.append(Check(anchor, f"h1 total a={a}", 1 if a == 1 else 0, rep.h1_total))
        out.append(Check(anchor, f"tau a={a}", 3, horizontal_reduce(spec).tau))
        out.append(Check(anchor, f"gcv genus a={a}", 1 if a == 1 else 0, genus(gcv_cover(spec))))
        out.append(Check(anchor, f"components a={a}", 1, connected_components(spec)))
        twisted = torsion_choice_spec(a, twist=True)
        out.append(Check(anchor, f"tau' a={a}", 1, horizontal_reduce(twisted).tau))
        out.append(Check(anchor, f"h1 total twisted a={a}", 0, eigen_report(twisted).h1_total))
    spec = torsion_choice_spec(1)
    L2 = canonical_form(spec.S, L_divisor(spec, 2))
    out.append(Check(anchor, "c of L^(2) for a=1", -2, L2.c))
    out.append(Check(anchor, "dims[2] for a=1", 1, eigen_report(spec).dims[2]))
    return out


def mixed_part_spec(H: Divisor) -> CoverSpec:
    return CoverSpec(r3_surface(), 6, Divisor({C: 3, G(): 3}), H)


def _mixed_part_checks(anchor: str) -> list[Check]:
    S = r3_surface()
    out = []
    split_c = mixed_part_spec(Divisor({C: 2}))
    out.append(Check(anchor, "components H=2C", 3, connected_components(split_c)))
    out.append(Check(anchor, "h1 total H=2C", 0, eigen_report(split_c).h1_total))
    spec_e = mixed_part_spec(Divisor({E: 2}))
    expected = CycPoly.from_cyclotomic({3: 1, 6: 1})
    actual = eigen_report(spec_e).charpoly
    out.append(Check(anchor, "charpoly H=2E", expected.cyclotomic_str(), actual.cyclotomic_str()))
    T = torsion_generator(S)
    out.append(Check(anchor, "h1(T)", 0, betti(S, T).h1))
    out.append(Check(anchor, "h1(2T)", 1, betti(S, T * 2).h1))
    spec_t = mixed_part_spec(Divisor({E: 2, A(1): 1, A(2): -1}))
    target = Divisor({A(2): 1, A(3): -1})
    out.append(Check(anchor, "L^(2) ~ A2-A3", True, linearly_equivalent(S, L_divisor(spec_t, 2), target)))
    out.append(Check(anchor, "L^(4) ~ A3-A2", True, linearly_equivalent(S, L_divisor(spec_t, 4), -target)))
    red = horizontal_reduce(spec_t)
    out.append(Check(anchor, "d_tau H=2E+A1-A2", 3, red.d_tau))
    out.append(Check(anchor, "gcv degree H=2E+A1-A2", 2, red.tau))
    out.append(Check(anchor, "gcv genus H=2E+A1-A2", 0, genus(gcv_cover(spec_t, red))))
    return out


def general_spec() -> CoverSpec:
    S = new_fake_quadric([(6, 5), (9, 1), (18, 1)])
    D = Divisor({C: 90, E: 90, G("1"): 15, G("2"): 165, A(1): 36, A(2): 18, A(3): 36})
    H = Divisor({E: 1, G("2"): 1, A(1): 2, A(2): -3, A(3): 1})
    return CoverSpec(S, 180, D, H)


def _general_checks(anchor: str) -> list[Check]:
    spec = general_spec()
    rep = split_general(spec)
    red = rep.reduction
    vertical_set = [l for l, k in enumerate(eigen_dims(rep.vertical_cover)) if k]
    out = [
        Check(anchor, "vertical degree", 15, rep.d_v),
        Check(anchor, "horizontal degree", 18, rep.d_h),
        Check(anchor, "restriction to E", [6, 7, 2, -15], list(rep.vertical_cover.mults)),
        Check(anchor, "vertical charpoly", True, rep.delta1 == CycPoly.from_cyclotomic({5: 1, 15: 1})),
        Check(anchor, "vertical eigenspaces", [2, 4, 6, 7, 12, 14], vertical_set),
        Check(anchor, "d_tau", 9, red.d_tau),
        Check(anchor, "tau", 2, red.tau),
        Check(anchor, "n", 3, red.n),
        Check(
            anchor,
            "holomorphic eigenvalues of the horizontal part",
            {"1/2": 1},
            {str(x): k for x, k in cover_holomorphic_eigenvalues(rep.gcv_cover).items()},
        ),
    ]
    return out


ANCHORS: dict[str, Callable[[str], list[Check]]] = {
    "ex:torsion": _torsion_checks,
    "ex:class-groups": _class_group_checks,
    "ex:torsion-choice": _torsion_choice_checks,
    "ex:mixed-part": _mixed_part_checks,
    "ex:general": _general_checks,
}


def run_fixtures(anchor: str | None = None) -> list[Check]:
    if anchor is not None and anchor not in ANCHORS:
        raise KeyError(anchor)
    names = [anchor] if anchor else list(ANCHORS)
    return [check for name in names for check in ANCHORS[name](name)]


__all__ = ["ANCHORS", "Check", "run_fixtures"]
