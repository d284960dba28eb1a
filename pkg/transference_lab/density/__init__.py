"""Density exponents, reference Turan densities and denseness probes."""

from .exponents import PATTERN_VERTEX_LIMIT, DensityReport, m_of_hypergraph, pattern_density
from .probes import (
    InducedEdgeProbe,
    SupersaturationRow,
    min_induced_edges,
    supersaturation_profile,
)
from .turan import TuranDensity, chromatic_number, is_partite, turan_density_reference

__all__ = [
    "PATTERN_VERTEX_LIMIT",
    "DensityReport",
    "m_of_hypergraph",
    "pattern_density",
    "InducedEdgeProbe",
    "SupersaturationRow",
    "min_induced_edges",
    "supersaturation_profile",
    "TuranDensity",
    "chromatic_number",
    "is_partite",
    "turan_density_reference",
]
