"""Exact search and verification of patterns in images of rational points
of elliptic curves under maps to the projective line."""

from .algebra import INF, Rational, UniPoly, rational_roots, squarefree_part, substitute_mobius
from .curve import IDENTITY, Curve, Point
from .hypothesis import (BranchSet, Verdict, branch_set, branch_set_x, branch_sets_equal,
                         check_pattern_hypothesis, critical_values, lattes_duplication, mobius_image_branch_set)
from .maps import CoordinateMap, MobiusMap, RationalFunction, mobius_torsion_order
from .membership import g_membership, is_square, naive_point_search, y_candidates
from .patterns import (PatternKind, PatternReport, best_additive_shift, implied_constant, longest_ap,
                       longest_gp, longest_orbit, scaling_intersection, shift_intersection)
from .subgroup import GammaSpec, ValueSet, enumerate_gamma, image_set, intersect_images

__version__ = "0.1.0"

__all__ = [
    "INF", "Rational", "UniPoly", "rational_roots", "squarefree_part", "substitute_mobius", "IDENTITY",
    "Curve", "Point", "BranchSet", "Verdict", "branch_set", "branch_set_x", "branch_sets_equal",
    "check_pattern_hypothesis", "critical_values", "lattes_duplication", "mobius_image_branch_set",
    "CoordinateMap", "MobiusMap", "RationalFunction", "mobius_torsion_order", "g_membership", "is_square",
    "naive_point_search", "y_candidates", "PatternKind", "PatternReport", "best_additive_shift",
    "implied_constant", "longest_ap", "longest_gp", "longest_orbit", "scaling_intersection",
    "shift_intersection", "GammaSpec", "ValueSet", "enumerate_gamma", "image_set", "intersect_images",
]
