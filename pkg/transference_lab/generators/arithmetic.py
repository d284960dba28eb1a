"""Arithmetic progressions and homothetic copies of point configurations."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable
from typing import Any

from transference_lab.errors import InputError
from transference_lab.hypergraphs import Label, UniformHypergraph
from transference_lab.validation import validate_positive_int

from .spec import normalize_points

logger = logging.getLogger(__name__)


def ap_edge_count(n: int, k: int) -> int:
    """sum over d = 1..floor((n-1)/(k-1)) of (n - (k-1) d)."""

    if n < 1:
        return 0
    return sum(n - (k - 1) * d for d in range(1, (n - 1) // (k - 1) + 1))


def gen_ap(n: int, k: int) -> UniformHypergraph:
    """All k-term arithmetic progressions in [n]; vertex ``i`` carries label ``i + 1``."""

    validate_positive_int(n, field="n")
    if isinstance(k, bool) or not isinstance(k, int) or k < 3:
        raise InputError(
            f"Progression length k must be at least 3, got {k!r}.", payload={"field": "k"}
        )

    edges = []
    for start in range(n):
        for step in range(1, (n - 1 - start) // (k - 1) + 1):
            edges.append(tuple(range(start, start + k * step, step)))
    # start-major, step-minor enumeration is already lexicographic
    logger.debug("Generated %s %s-term progressions in [%s]", len(edges), k, n)
    return UniformHypergraph._trusted(k, n, tuple(edges), tuple(range(1, n + 1)))


def grid_labels(n: int, dimension: int) -> tuple[Label, ...]:
    """Labels of [n]^dimension in lexicographic order (plain integers when dimension is 1)."""

    if dimension == 1:
        return tuple(range(1, n + 1))
    return tuple(itertools.product(range(1, n + 1), repeat=dimension))


def _grid_index(point: tuple[int, ...], n: int) -> int:
    index = 0
    for coordinate in point:
        index = index * n + (coordinate - 1)
    return index


def gen_homothetic(n: int, dimension: int, points: Iterable[Any]) -> UniformHypergraph:
    """All sets y0 + lambda * F inside [n]^dimension, y0 >= 0 and lambda >= 1 integral."""

    validate_positive_int(n, field="n")
    validate_positive_int(dimension, field="dimension")
    F = normalize_points(points, dimension)
    if len(F) < 3:
        raise InputError(
            f"Homothetic copies need |F| >= 3, got {len(F)}.", payload={"field": "points"}
        )

    lows = [min(point[j] for point in F) for j in range(dimension)]
    highs = [max(point[j] for point in F) for j in range(dimension)]

    edges: set[tuple[int, ...]] = set()
    for dilation in range(1, n + 1):
        ranges = []
        for j in range(dimension):
            first = max(0, 1 - dilation * lows[j])
            last = n - dilation * highs[j]
            ranges.append(range(first, last + 1))
        if any(len(r) == 0 for r in ranges):
            continue
        for translate in itertools.product(*ranges):
            image = (
                tuple(translate[j] + dilation * point[j] for j in range(dimension)) for point in F
            )
            edges.add(tuple(sorted(_grid_index(p, n) for p in image)))

    return UniformHypergraph._trusted(
        len(F), n**dimension, tuple(sorted(edges)), grid_labels(n, dimension)
    )
