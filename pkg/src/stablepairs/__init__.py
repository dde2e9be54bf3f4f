"""Exact-arithmetic K-stability decisions for weighted vector pairs.

The public surface: lattice contexts and pairings, rational weight
polytopes, an exact LP core, the stability decision procedures with
machine-checkable certificates, constructive degenerations, the numeric
slope layer, and a brute-force oracle for independent verification.
"""

from .degeneration import DegenerationProblem, find_degeneration, limit_support
from .lattice import InputError, LatticeContext, ModeError, pair, standard_simplex
from .numeric import CoefficientVector, TorusPoint, f_energy, norm_sq, p_value, slope_along
from .polytope import (
    RationalPolytope,
    contains_point,
    first_outside_vertex,
    hull_vertices,
    includes,
    minkowski_combine,
    simplex_contains,
    support_value,
)
from .stability import (
    FrameFamily,
    PairInstance,
    StabilityVerdict,
    WeightSupport,
    check_tian0,
    deg_of_V,
    is_semistable,
    is_stable,
    minimal_uniform_m,
    verdict,
    weight,
)

__all__ = [
    "CoefficientVector",
    "DegenerationProblem",
    "FrameFamily",
    "InputError",
    "LatticeContext",
    "ModeError",
    "PairInstance",
    "RationalPolytope",
    "StabilityVerdict",
    "TorusPoint",
    "WeightSupport",
    "check_tian0",
    "contains_point",
    "deg_of_V",
    "f_energy",
    "find_degeneration",
    "first_outside_vertex",
    "hull_vertices",
    "includes",
    "is_semistable",
    "is_stable",
    "limit_support",
    "minimal_uniform_m",
    "minkowski_combine",
    "norm_sq",
    "p_value",
    "pair",
    "simplex_contains",
    "slope_along",
    "standard_simplex",
    "support_value",
    "verdict",
    "weight",
]

__version__ = "0.1.0"
