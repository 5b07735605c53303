"""Rooted combinatorial maps and slit-slide-sew bijections on the torus."""
from .bijections import CaseTag, MarkedTree, apply_case, case_of, invert_case, theta, xi
from .core import (
    CombinatorialMap,
    MapType,
    bipartite_coloring,
    build_map,
    canonical_form,
    faces,
    genus,
    graph_distance,
    is_bipartite,
    same_map,
)
from .covered import (
    CoveredMap,
    bipartite_equivalence,
    covered_inverse,
    covered_suite,
    rotate_covered,
    spanning_unicellular_submaps,
)
from .enumeration import (
    CountReport,
    gen_maps_of_type,
    gen_marked_trees,
    gen_unicellular,
    verify_eq1_numeric,
    verify_eq2,
    verify_eq3,
)
from .paths import Side, Sign, concat, is_contractible, is_simple_loop, reverse, side_of_arrival
from .rightmost import RightmostDecomposition, psi, rightmost_path
from .slide import RotationResult, SlitComplex, rotate, sew, slit, transport_path
from .textio import format_map, parse_blocks, parse_map
from .torus import SchemeInfo, SchemeKind, classify, scheme

__all__ = [
    "CaseTag", "MarkedTree", "apply_case", "case_of", "invert_case", "theta", "xi",
    "CombinatorialMap", "MapType", "bipartite_coloring", "build_map", "canonical_form",
    "faces", "genus", "graph_distance", "is_bipartite", "same_map",
    "CoveredMap", "bipartite_equivalence", "covered_inverse", "covered_suite",
    "rotate_covered", "spanning_unicellular_submaps",
    "CountReport", "gen_maps_of_type", "gen_marked_trees", "gen_unicellular",
    "verify_eq1_numeric", "verify_eq2", "verify_eq3",
    "Side", "Sign", "concat", "is_contractible", "is_simple_loop", "reverse", "side_of_arrival",
    "RightmostDecomposition", "psi", "rightmost_path",
    "RotationResult", "SlitComplex", "rotate", "sew", "slit", "transport_path",
    "format_map", "parse_blocks", "parse_map",
    "SchemeInfo", "SchemeKind", "classify", "scheme",
]
