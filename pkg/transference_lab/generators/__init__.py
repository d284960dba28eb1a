"""Configuration hypergraph generators for the five families."""

from .arithmetic import ap_edge_count, gen_ap, gen_homothetic, grid_labels
from .copies import (
    NAMED_PATTERNS,
    colex_rank,
    colex_subsets,
    complete_pattern,
    cycle_pattern,
    gen_fcopies,
    named_pattern,
    path_pattern,
    pattern_orbit,
    single_edge_pattern,
)
from .linear import gen_linear, gen_schur
from .registry import (
    build_hypergraph,
    get_builder,
    list_families,
    register_family,
    reset_registry,
    unregister_family,
)
from .spec import ConfigSpec, FamilyVariant, has_repeated_vertex, normalize_points

__all__ = [
    "ap_edge_count",
    "gen_ap",
    "gen_homothetic",
    "grid_labels",
    "NAMED_PATTERNS",
    "colex_rank",
    "colex_subsets",
    "complete_pattern",
    "cycle_pattern",
    "gen_fcopies",
    "named_pattern",
    "path_pattern",
    "pattern_orbit",
    "single_edge_pattern",
    "gen_linear",
    "gen_schur",
    "build_hypergraph",
    "get_builder",
    "list_families",
    "register_family",
    "reset_registry",
    "unregister_family",
    "ConfigSpec",
    "FamilyVariant",
    "has_repeated_vertex",
    "normalize_points",
]
