"""Finite denseness probes: fewest configurations spanned by m vertices."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset
from transference_lab.monitoring import timed_operation
from transference_lab.randomness import Stream, philox_rng

logger = logging.getLogger(__name__)

DEFAULT_EXACT_LIMIT = 24
DEFAULT_ITERATIONS = 20_000


@dataclass(frozen=True)
class InducedEdgeProbe:
    """min e(H[U]) over |U| = m; ``exact`` is False for a local-search upper bound."""

    m: int
    count: int
    witness: VertexSubset
    exact: bool


def _lower_masks(H: UniformHypergraph) -> list[list[int]]:
    """For every vertex v, the masks of e \\ {v} over edges whose largest vertex is v."""

    lower: list[list[int]] = [[] for _ in range(H.vertex_count)]
    for edge, mask in zip(H.edges, H.edge_masks, strict=True):
        top = edge[-1]
        lower[top].append(mask & ~(1 << top))
    return lower


def _exact_minimum(H: UniformHypergraph, m: int, limit: int) -> tuple[int, tuple[int, ...]] | None:
    """Lexicographically first subset of size m spanning the fewest edges, if any spans <= limit."""

    n = H.vertex_count
    lower = _lower_masks(H)
    best: list = [None, None]
    bound = [limit]

    def visit(vertex: int, chosen: int, size: int, count: int) -> None:
        if count > bound[0]:
            return
        if size == m:
            if best[0] is None or count < best[0]:
                best[0], best[1] = count, chosen
                bound[0] = count - 1
            return
        if n - vertex < m - size:
            return
        added = sum(1 for mask in lower[vertex] if mask & chosen == mask)
        visit(vertex + 1, chosen | (1 << vertex), size + 1, count + added)
        visit(vertex + 1, chosen, size, count)

    visit(0, 0, 0, 0)
    if best[0] is None:
        return None
    return best[0], VertexSubset.from_mask(n, best[1]).members


def _local_search(
    H: UniformHypergraph, m: int, iterations: int, seed: int
) -> tuple[int, tuple[int, ...]]:
    """Swap-based descent from the m lowest-degree vertices, accepting non-worsening swaps."""

    rng = philox_rng(seed, Stream.LOCAL_SEARCH, m)
    n = H.vertex_count
    order = sorted(range(n), key=lambda v: (H.degrees[v], v))
    inside = order[:m]
    outside = order[m:]
    chosen = sum(1 << v for v in inside)
    masks = H.edge_masks
    incidence = H.incidence

    def through(v: int, subset: int) -> int:
        return sum(1 for position in incidence[v] if masks[position] & subset == masks[position])

    count = sum(1 for mask in masks if mask & chosen == mask)
    best_count, best_mask = count, chosen
    if m in (0, n):
        return best_count, VertexSubset.from_mask(n, best_mask).members

    for _ in range(iterations):
        if best_count == 0:
            break
        i = int(rng.integers(len(inside)))
        j = int(rng.integers(len(outside)))
        u, w = inside[i], outside[j]
        without = chosen & ~(1 << u)
        candidate = without | (1 << w)
        delta = through(w, candidate) - through(u, chosen)
        if delta <= 0:
            inside[i], outside[j] = w, u
            chosen = candidate
            count += delta
            if count < best_count:
                best_count, best_mask = count, chosen
    return best_count, VertexSubset.from_mask(n, best_mask).members


def min_induced_edges(
    H: UniformHypergraph,
    m: int,
    *,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
) -> InducedEdgeProbe:
    if isinstance(m, bool) or not isinstance(m, int) or not 0 <= m <= H.vertex_count:
        raise InputError(
            f"m must lie in [0, {H.vertex_count}], got {m!r}.", payload={"field": "m"}
        )
    n = H.vertex_count
    if m == 0:
        return InducedEdgeProbe(0, 0, VertexSubset.empty(n), True)
    if m == n:
        return InducedEdgeProbe(m, H.edge_count, VertexSubset.full(n), True)

    heuristic_count, heuristic_members = _local_search(H, m, iterations, seed)
    if n > exact_limit:
        logger.info("Probe on %s vertices is heuristic (limit %s)", n, exact_limit)
        return InducedEdgeProbe(m, heuristic_count, VertexSubset(n, heuristic_members), False)

    with timed_operation("density.min_induced_edges", metadata={"vertices": n, "m": m}):
        found = _exact_minimum(H, m, heuristic_count)
    # the heuristic count is attainable, so the search always finds a subset
    assert found is not None
    count, members = found
    return InducedEdgeProbe(m, count, VertexSubset(n, members), True)


@dataclass(frozen=True)
class SupersaturationRow:
    fraction: float
    m: int
    count: int
    ratio: float
    exact: bool


def supersaturation_profile(
    H: UniformHypergraph,
    fractions: Iterable[float],
    *,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
) -> list[SupersaturationRow]:
    """min e(H[U]) / e(H) over |U| = ceil(f |V|) for each fraction f."""

    if H.edge_count == 0:
        raise InputError("empty configuration family", payload={"field": "hypergraph"})
    rows = []
    for fraction in fractions:
        if not 0.0 <= fraction <= 1.0:
            raise InputError(
                f"Fraction {fraction} is outside [0, 1].", payload={"field": "fractions"}
            )
        m = math.ceil(fraction * H.vertex_count)
        probe = min_induced_edges(H, m, exact_limit=exact_limit, iterations=iterations, seed=seed)
        rows.append(
            SupersaturationRow(
                fraction=fraction,
                m=m,
                count=probe.count,
                ratio=probe.count / H.edge_count,
                exact=probe.exact,
            )
        )
    return rows
