"""Copies of a fixed l-uniform pattern inside the complete l-uniform hypergraph."""

from __future__ import annotations

import itertools
import logging
import math
import re
from functools import lru_cache

import networkx as nx
from networkx.algorithms import isomorphism

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph
from transference_lab.validation import validate_positive_int

logger = logging.getLogger(__name__)

_EDGE_PATTERN = re.compile(r"^edge-(\d+)$")


@lru_cache(maxsize=32)
def colex_subsets(n: int, dimension: int) -> tuple[tuple[int, ...], ...]:
    """The ``dimension``-subsets of {0..n-1} in colexicographic order."""

    return tuple(
        sorted(itertools.combinations(range(n), dimension), key=lambda combo: combo[::-1])
    )


def colex_rank(subset: tuple[int, ...]) -> int:
    """Position of a sorted 0-based subset in colexicographic order."""

    return sum(_binomial(c, position) for position, c in enumerate(subset, start=1))


def _binomial(n: int, r: int) -> int:
    return 0 if n < r else math.comb(n, r)


def complete_pattern(vertices: int, dimension: int = 2) -> UniformHypergraph:
    if vertices < dimension:
        raise InputError(
            f"Complete pattern needs at least {dimension} vertices.", payload={"field": "pattern"}
        )
    return UniformHypergraph(
        dimension, vertices, tuple(itertools.combinations(range(vertices), dimension))
    )


def path_pattern(vertices: int) -> UniformHypergraph:
    """Graph path on ``vertices`` vertices."""

    if vertices < 2:
        raise InputError("A path needs at least two vertices.", payload={"field": "pattern"})
    return UniformHypergraph(2, vertices, tuple((v, v + 1) for v in range(vertices - 1)))


def cycle_pattern(vertices: int) -> UniformHypergraph:
    if vertices < 3:
        raise InputError("A cycle needs at least three vertices.", payload={"field": "pattern"})
    edges = tuple((v, (v + 1) % vertices) for v in range(vertices))
    return UniformHypergraph(2, vertices, edges)


def single_edge_pattern(dimension: int) -> UniformHypergraph:
    return UniformHypergraph(dimension, dimension, (tuple(range(dimension)),))


NAMED_PATTERNS = ("K3", "K4", "K5", "P3", "C4", "C5", "K4-3", "edge-<l>")


def named_pattern(name: str) -> UniformHypergraph:
    """Look up a pattern by short name (see ``NAMED_PATTERNS``)."""

    key = name.strip()
    builders = {
        "K3": lambda: complete_pattern(3),
        "K4": lambda: complete_pattern(4),
        "K5": lambda: complete_pattern(5),
        "P3": lambda: path_pattern(3),
        "C4": lambda: cycle_pattern(4),
        "C5": lambda: cycle_pattern(5),
        "K4-3": lambda: complete_pattern(4, 3),
    }
    if key in builders:
        return builders[key]()
    match = _EDGE_PATTERN.match(key)
    if match:
        return single_edge_pattern(int(match.group(1)))
    raise InputError(
        f"Unknown pattern '{name}'. Available patterns: {', '.join(NAMED_PATTERNS)}",
        payload={"field": "pattern"},
    )


def pattern_orbit(F: UniformHypergraph) -> tuple[frozenset[tuple[int, ...]], ...]:
    """Distinct edge sets obtained by relabelling F's vertices among themselves."""

    v = F.vertex_count
    images: set[frozenset[tuple[int, ...]]] = set()
    if F.uniformity == 2:
        pattern = nx.Graph()
        pattern.add_nodes_from(range(v))
        pattern.add_edges_from(F.edges)
        matcher = isomorphism.GraphMatcher(nx.complete_graph(v), pattern)
        for mapping in matcher.subgraph_monomorphisms_iter():
            placed = {target: source for source, target in mapping.items()}
            images.add(frozenset(tuple(sorted((placed[a], placed[b]))) for a, b in F.edges))
    else:
        for permutation in itertools.permutations(range(v)):
            images.add(
                frozenset(tuple(sorted(permutation[x] for x in edge)) for edge in F.edges)
            )
    return tuple(sorted(images, key=sorted))


def gen_fcopies(n: int, dimension: int, F: UniformHypergraph) -> UniformHypergraph:
    """Copy hypergraph of F in K_n^(dimension).

    Vertices are the ``dimension``-subsets of [n] in colex order, labelled
    by their 1-based elements; every edge is the edge set of one unlabelled
    copy of F, so the result is e(F)-uniform and F needs at least two edges.
    """

    validate_positive_int(n, field="n")
    if F.uniformity != dimension:
        raise InputError(
            f"Pattern is {F.uniformity}-uniform but copies are taken in K_n^({dimension}).",
            payload={"field": "dimension"},
        )
    if F.edge_count < 2:
        raise InputError(
            "Pattern needs at least two edges for a copy hypergraph.", payload={"field": "pattern"}
        )
    if any(d == 0 for d in F.degrees):
        raise InputError(
            "Pattern has isolated vertices; strip them first.", payload={"field": "pattern"}
        )
    if n < F.vertex_count:
        raise InputError(
            f"n = {n} is smaller than v(F) = {F.vertex_count}.", payload={"field": "n"}
        )

    vertices = colex_subsets(n, dimension)
    orbit = pattern_orbit(F)
    edges: set[tuple[int, ...]] = set()
    for chosen in itertools.combinations(range(n), F.vertex_count):
        for image in orbit:
            edges.add(
                tuple(sorted(colex_rank(tuple(chosen[x] for x in edge)) for edge in image))
            )

    labels = tuple(tuple(c + 1 for c in subset) for subset in vertices)
    logger.debug("Pattern with %s edges has %s copies in K_%s", F.edge_count, len(edges), n)
    return UniformHypergraph._trusted(F.edge_count, len(vertices), tuple(sorted(edges)), labels)
