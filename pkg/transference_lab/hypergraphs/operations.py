"""Degree and edge-counting primitives on uniform hypergraphs."""

from __future__ import annotations

import numpy as np

from transference_lab.errors import InputError

from .model import UniformHypergraph, VertexSubset


def _check_subset(H: UniformHypergraph, U: VertexSubset, *, field: str) -> None:
    if U.universe != H.vertex_count:
        raise InputError(
            f"Subset '{field}' ranges over {U.universe} vertices, hypergraph has "
            f"{H.vertex_count}.",
            payload={"field": field},
        )


def _check_vertex(H: UniformHypergraph, v: int) -> None:
    if not 0 <= v < H.vertex_count:
        raise InputError(
            f"Vertex index {v} is outside 0..{H.vertex_count - 1}.",
            payload={"field": "vertex", "value": v},
        )


def contained_edge_flags(H: UniformHypergraph, U: VertexSubset) -> np.ndarray:
    """Boolean array marking edges of H that lie inside U."""

    if H.edge_count == 0:
        return np.zeros(0, dtype=bool)
    return U.flags[H.edge_array].all(axis=1)


def induced_subhypergraph(H: UniformHypergraph, U: VertexSubset) -> UniformHypergraph:
    """Return H[U] on vertices ``0..|U|-1``.

    New vertex ``j`` is old vertex ``U.members[j]``; the labels of the result
    are H's labels (or the old indices when H is unlabelled), so the label map
    doubles as the back-mapping.
    """

    _check_subset(H, U, field="U")
    members = U.members
    relabel = np.full(H.vertex_count, -1, dtype=np.int64)
    relabel[list(members)] = np.arange(len(members), dtype=np.int64)

    keep = contained_edge_flags(H, U)
    if H.edge_count:
        kept = relabel[H.edge_array[keep]]
    else:
        kept = np.zeros((0, H.uniformity), dtype=np.int64)
    # relabel is increasing, so canonical order and sortedness survive
    edges = tuple(tuple(int(vertex) for vertex in row) for row in kept)

    if H.labels is None:
        labels: tuple = tuple(members)
    else:
        labels = tuple(H.labels[index] for index in members)
    return UniformHypergraph._trusted(H.uniformity, len(members), edges, labels)


def degree(H: UniformHypergraph, v: int) -> int:
    _check_vertex(H, v)
    return H.degrees[v]


def deg_i_count(H: UniformHypergraph, v: int, U: VertexSubset, i: int) -> int:
    """Number of edges through ``v`` with at least ``i`` vertices in ``U \\ {v}``."""

    _check_vertex(H, v)
    _check_subset(H, U, field="U")
    if not 1 <= i <= H.uniformity - 1:
        raise InputError(
            f"i must lie in [1, {H.uniformity - 1}], got {i}.", payload={"field": "i", "value": i}
        )

    others = U.mask & ~(1 << v)
    count = 0
    masks = H.edge_masks
    for position in H.incidence[v]:
        if (masks[position] & others).bit_count() >= i:
            count += 1
    return count


def deg_i_vector(H: UniformHypergraph, U: VertexSubset | np.ndarray, i: int) -> np.ndarray:
    """deg_i(v, U) for every vertex at once."""

    flags = U.flags if isinstance(U, VertexSubset) else np.asarray(U, dtype=bool)
    result = np.zeros(H.vertex_count, dtype=np.int64)
    if H.edge_count == 0:
        return result
    inside = flags[H.edge_array]
    hits = inside.sum(axis=1, keepdims=True) - inside
    qualifying = hits >= i
    np.add.at(result, H.edge_array[qualifying], 1)
    return result


def count_E_U_i(H: UniformHypergraph, U: VertexSubset, W: VertexSubset, i: int) -> int:
    """|E_U^i(W)|: edges inside U meeting W in at least ``i`` vertices."""

    _check_subset(H, U, field="U")
    _check_subset(H, W, field="W")
    _check_levels(H, W, U, i)

    umask, wmask = U.mask, W.mask
    count = 0
    for mask in H.edge_masks:
        if mask & umask == mask and (mask & wmask).bit_count() >= i:
            count += 1
    return count


def count_E_U_i_indexed(H: UniformHypergraph, U: VertexSubset, W: VertexSubset, i: int) -> int:
    """Same count as :func:`count_E_U_i`, collected from W's incidence lists."""

    _check_subset(H, U, field="U")
    _check_subset(H, W, field="W")
    _check_levels(H, W, U, i)
    if i == 0:
        return int(contained_edge_flags(H, U).sum())

    hits: dict[int, int] = {}
    for vertex in W.members:
        for position in H.incidence[vertex]:
            hits[position] = hits.get(position, 0) + 1

    umask = U.mask
    masks = H.edge_masks
    return sum(
        1
        for position, meet in hits.items()
        if meet >= i and masks[position] & umask == masks[position]
    )


def edge_free(H: UniformHypergraph, S: VertexSubset) -> bool:
    """True when no edge of H lies entirely inside S."""

    _check_subset(H, S, field="S")
    return not contained_edge_flags(H, S).any()


def _check_levels(H: UniformHypergraph, W: VertexSubset, U: VertexSubset, i: int) -> None:
    if not W.issubset(U):
        raise InputError("W must be a subset of U.", payload={"field": "W"})
    if not 0 <= i <= H.uniformity:
        raise InputError(
            f"i must lie in [0, {H.uniformity}], got {i}.", payload={"field": "i", "value": i}
        )
