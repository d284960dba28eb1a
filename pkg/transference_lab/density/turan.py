"""Reference Turan densities for small patterns."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from transference_lab.hypergraphs import UniformHypergraph

logger = logging.getLogger(__name__)

CHROMATIC = "chromatic"
PARTITE = "partite"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class TuranDensity:
    """pi(F) when it is determined, else ``value is None`` with provenance ``unknown``."""

    value: Fraction | None
    provenance: str
    chromatic_number: int | None = None

    @property
    def known(self) -> bool:
        return self.value is not None


def _as_graph(F: UniformHypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(F.vertex_count))
    graph.add_edges_from(F.edges)
    return graph


def _colorable(graph: nx.Graph, order: list[int], colors: int) -> bool:
    assignment: dict[int, int] = {}

    def place(position: int) -> bool:
        if position == len(order):
            return True
        vertex = order[position]
        taken = {assignment[u] for u in graph[vertex] if u in assignment}
        # a fresh color is interchangeable with every other unused one
        limit = min(colors, max(assignment.values(), default=-1) + 2)
        for color in range(limit):
            if color in taken:
                continue
            assignment[vertex] = color
            if place(position + 1):
                return True
            del assignment[vertex]
        return False

    return place(0)


def chromatic_number(F: UniformHypergraph) -> int:
    """Exact chromatic number of a graph pattern by backtracking."""

    if F.uniformity != 2:
        raise ValueError("chromatic_number expects a graph (2-uniform) pattern")
    graph = _as_graph(F)
    if F.vertex_count == 0:
        return 0
    if F.edge_count == 0:
        return 1
    upper = max(nx.coloring.greedy_color(graph, strategy="largest_first").values()) + 1
    order = sorted(graph.nodes, key=lambda v: (-graph.degree(v), v))
    for colors in range(2, upper):
        if _colorable(graph, order, colors):
            return colors
    return upper


def is_partite(F: UniformHypergraph) -> bool:
    """True when the vertices split into l classes with every edge meeting each class once."""

    classes = F.uniformity
    assignment: list[int | None] = [None] * F.vertex_count
    incidence = F.incidence

    def consistent(vertex: int) -> bool:
        for position in incidence[vertex]:
            seen = [assignment[u] for u in F.edges[position] if assignment[u] is not None]
            if len(seen) != len(set(seen)):
                return False
        return True

    def place(vertex: int) -> bool:
        if vertex == F.vertex_count:
            return True
        used = max((c for c in assignment[:vertex] if c is not None), default=-1)
        for cls in range(min(classes, used + 2)):
            assignment[vertex] = cls
            if consistent(vertex) and place(vertex + 1):
                return True
        assignment[vertex] = None
        return False

    return place(0)


def turan_density_reference(F: UniformHypergraph) -> TuranDensity:
    """pi(F) from the chromatic number for graphs, 0 for l-partite patterns, else unknown."""

    if F.uniformity == 2:
        chi = chromatic_number(F)
        if chi >= 3:
            return TuranDensity(1 - Fraction(1, chi - 1), CHROMATIC, chi)
        return TuranDensity(Fraction(0), CHROMATIC, chi)
    if is_partite(F):
        return TuranDensity(Fraction(0), PARTITE)
    logger.info("Turan density of a %s-uniform pattern is not determined", F.uniformity)
    return TuranDensity(None, UNKNOWN)
