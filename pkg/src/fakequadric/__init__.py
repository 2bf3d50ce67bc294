"""Exact cohomology of Weil divisors and cyclic covers on reducible normal fake quadrics."""

from .classgroup import (
    CanonicalClass,
    canonical_form,
    divide_class,
    group_structure,
    horizontal_membership,
    is_principal,
    lattice_point,
    linearly_equivalent,
    torsion_generator,
    torsion_order,
)
from .cohomology import BettiTriple, Region, betti, chi, h0, h0_oracle, h2, region
from .cover import (
    CoverSpec,
    EigenReport,
    HorizontalReduction,
    SplitReport,
    L_class,
    connected_components,
    eigen_report,
    gcv_cover,
    horizontal_reduce,
    restrict_to,
    split_general,
    validate,
)
from .leyomdin import LYInput, build_surface, derive, monodromy_charpoly, primitive_vertical
from .p1cover import CycPoly, P1Cover, alexander, components, h1_eigen, zeta_alexander
from .surface import A, C, Curve, Divisor, E, F, FakeQuadric, G, canonical_divisor, intersect, new_fake_quadric

__version__ = "0.1.0"

__all__ = [
    "A",
    "BettiTriple",
    "C",
    "CanonicalClass",
    "CoverSpec",
    "Curve",
    "CycPoly",
    "Divisor",
    "E",
    "EigenReport",
    "F",
    "FakeQuadric",
    "G",
    "HorizontalReduction",
    "LYInput",
    "L_class",
    "P1Cover",
    "Region",
    "SplitReport",
    "alexander",
    "betti",
    "build_surface",
    "canonical_divisor",
    "canonical_form",
    "chi",
    "components",
    "connected_components",
    "derive",
    "divide_class",
    "eigen_report",
    "gcv_cover",
    "group_structure",
    "h0",
    "h0_oracle",
    "h1_eigen",
    "h2",
    "horizontal_membership",
    "horizontal_reduce",
    "intersect",
    "is_principal",
    "lattice_point",
    "linearly_equivalent",
    "monodromy_charpoly",
    "new_fake_quadric",
    "primitive_vertical",
    "region",
    "restrict_to",
    "split_general",
    "torsion_generator",
    "torsion_order",
    "validate",
    "zeta_alexander",
]
