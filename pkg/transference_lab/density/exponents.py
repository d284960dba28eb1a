"""The density exponent m(F) of a uniform pattern hypergraph."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset

from .turan import TuranDensity, turan_density_reference

logger = logging.getLogger(__name__)

PATTERN_VERTEX_LIMIT = 24


def pattern_density(edges: int, vertices: int, uniformity: int) -> Fraction:
    """(e - 1) / (v - l), or 1/l for a lone edge."""

    if edges < 1:
        raise InputError("Density needs at least one edge.", payload={"field": "pattern"})
    if vertices == uniformity:
        return Fraction(1, uniformity)
    return Fraction(edges - 1, vertices - uniformity)


@dataclass(frozen=True)
class DensityReport:
    """m(F) with the vertex set attaining it and the reference Turan density."""

    m: Fraction
    witness: VertexSubset
    witness_edges: int
    turan: TuranDensity

    @property
    def threshold_exponent(self) -> Fraction:
        return 1 / self.m


def _induced_edge_count(masks: tuple[int, ...], subset_mask: int) -> int:
    return sum(1 for mask in masks if mask & subset_mask == mask)


def m_of_hypergraph(F: UniformHypergraph) -> DensityReport:
    """Maximise d(F[S]) over vertex subsets S spanning at least one edge.

    Ties go to the lexicographically smallest S.
    """

    if F.edge_count == 0:
        raise InputError(
            "m(F) needs a pattern with at least one edge.", payload={"field": "pattern"}
        )
    if F.vertex_count > PATTERN_VERTEX_LIMIT:
        raise InputError(
            f"Pattern has {F.vertex_count} vertices; at most {PATTERN_VERTEX_LIMIT} are supported.",
            payload={"field": "pattern"},
        )

    masks = F.edge_masks
    best: tuple[Fraction, tuple[int, ...], int] | None = None
    for subset_mask in range(1, 1 << F.vertex_count):
        edges = _induced_edge_count(masks, subset_mask)
        if edges == 0:
            continue
        members = VertexSubset.from_mask(F.vertex_count, subset_mask).members
        value = pattern_density(edges, len(members), F.uniformity)
        if best is None or value > best[0] or (value == best[0] and members < best[1]):
            best = (value, members, edges)

    assert best is not None
    value, members, edges = best
    logger.debug("m(F) = %s attained on %s", value, members)
    return DensityReport(
        m=value,
        witness=VertexSubset(F.vertex_count, members),
        witness_edges=edges,
        turan=turan_density_reference(F),
    )
