"""Maximum edge-free vertex sets (hypergraph independence number).

The search keeps three pieces of state per node: ``free`` (undecided
vertices), ``forced`` (vertices committed to the set) and the live edges,
i.e. edges with no excluded vertex. An edge whose only undecided vertex is
``v`` forces ``v`` out; an edge with no undecided vertex left makes the node
infeasible. The bound is ``|forced| + |free| - matching`` where
``matching`` counts live edges with pairwise disjoint undecided parts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset
from transference_lab.logging import search_log_extra
from transference_lab.monitoring import timed_operation

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10_000_000
BRUTEFORCE_VERTEX_LIMIT = 24
_BRUTEFORCE_BLOCK = 1 << 16


@dataclass(frozen=True)
class SolveResult:
    """alpha with a witness; when ``exact`` is False, alpha = lower <= true value <= upper."""

    alpha: int
    witness: VertexSubset
    node_count: int
    exact: bool
    lower: int
    upper: int


@dataclass(frozen=True)
class SearchOutcome:
    best: int
    best_mask: int
    nodes: int
    upper: int
    complete: bool


def greedy_independent_set(H: UniformHypergraph) -> VertexSubset:
    """Add vertices in order of increasing degree whenever no edge gets completed."""

    chosen = 0
    masks = H.edge_masks
    for v in sorted(range(H.vertex_count), key=lambda vertex: (H.degrees[vertex], vertex)):
        candidate = chosen | (1 << v)
        if all(masks[p] & candidate != masks[p] for p in H.incidence[v]):
            chosen = candidate
    return VertexSubset.from_mask(H.vertex_count, chosen)


def deletion_free_subset(H: UniformHypergraph, X: VertexSubset | None = None) -> VertexSubset:
    """Drop the largest vertex of every edge still inside X; keeps >= |X| - e(H[X]) vertices."""

    current = (X if X is not None else H.full_subset()).mask
    for edge, mask in zip(H.edges, H.edge_masks, strict=True):
        if mask & current == mask:
            current &= ~(1 << edge[-1])
    return VertexSubset.from_mask(H.vertex_count, current)


def _propagate(free: int, forced: int, live: list[int]) -> tuple[int, list[int]] | None:
    while True:
        excluded_now = 0
        survivors: list[int] = []
        allowed = free | forced
        for edge in live:
            if edge & ~allowed:
                continue
            undecided = edge & free
            if undecided == 0:
                return None
            if undecided & (undecided - 1) == 0:
                excluded_now |= undecided
            else:
                survivors.append(edge)
        if not excluded_now:
            return free, survivors
        free &= ~excluded_now
        live = survivors


def _upper_bound(free: int, forced: int, live: list[int]) -> int:
    used = 0
    matching = 0
    for undecided in sorted((edge & free for edge in live), key=int.bit_count):
        if undecided & used == 0:
            used |= undecided
            matching += 1
    return forced.bit_count() + free.bit_count() - matching


def _search(H: UniformHypergraph, budget: int, target: int = 0) -> SearchOutcome:
    """Depth-first branch and bound; stops early once ``best >= target > 0``."""

    incumbent = max(
        (greedy_independent_set(H), deletion_free_subset(H)), key=lambda subset: subset.cardinality
    )
    best, best_mask = incumbent.cardinality, incumbent.mask
    if target and best >= target:
        return SearchOutcome(best, best_mask, 0, H.vertex_count, True)

    root = _propagate((1 << H.vertex_count) - 1, 0, list(H.edge_masks))
    assert root is not None
    stack = [(_upper_bound(root[0], 0, root[1]), root[0], 0, root[1])]
    nodes = 0
    target_pruned = -1

    while stack:
        if nodes >= budget:
            upper = max([best, target_pruned] + [entry[0] for entry in stack])
            return SearchOutcome(best, best_mask, nodes, upper, False)
        bound, free, forced, live = stack.pop()
        if bound <= best:
            continue
        if bound < target:
            target_pruned = max(target_pruned, bound)
            continue
        nodes += 1

        if not live:
            best, best_mask = (free | forced).bit_count(), free | forced
            if target and best >= target:
                return SearchOutcome(best, best_mask, nodes, H.vertex_count, True)
            continue

        branch_edge = min(live, key=lambda edge: (edge & free).bit_count())
        undecided = branch_edge & free
        members = []
        while undecided:
            low = undecided & -undecided
            members.append(low)
            undecided ^= low

        children = []
        committed = 0
        for vertex_bit in members:
            child = _propagate(free & ~vertex_bit & ~committed, forced | committed, live)
            if child is not None:
                child_free, child_live = child
                child_forced = forced | committed
                bound_here = _upper_bound(child_free, child_forced, child_live)
                children.append((bound_here, child_free, child_forced, child_live))
            committed |= vertex_bit
        stack.extend(reversed(children))

    upper = max(best, target_pruned)
    return SearchOutcome(best, best_mask, nodes, upper, True)


def _result_from(H: UniformHypergraph, outcome: SearchOutcome, budget: int) -> SolveResult:
    witness = VertexSubset.from_mask(H.vertex_count, outcome.best_mask)
    exact = outcome.complete
    upper = outcome.best if exact else outcome.upper
    if not exact:
        logger.warning(
            "Solver budget exhausted",
            extra=search_log_extra(
                event="solver.truncated",
                vertices=H.vertex_count,
                edges=H.edge_count,
                nodes=outcome.nodes,
                budget=budget,
                lower=outcome.best,
                upper=upper,
                exact=False,
            ),
        )
    return SolveResult(
        alpha=outcome.best,
        witness=witness,
        node_count=outcome.nodes,
        exact=exact,
        lower=outcome.best,
        upper=upper,
    )


def alpha_exact(H: UniformHypergraph, budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Largest vertex set containing no edge of H, by branch and bound within ``budget`` nodes."""

    if budget < 1:
        raise InputError("budget must be a positive integer.", payload={"field": "budget"})
    with timed_operation(
        "solver.alpha", metadata={"vertices": H.vertex_count, "edges": H.edge_count}
    ) as scope:
        outcome = _search(H, budget)
        scope.note(nodes=outcome.nodes, best=outcome.best, upper=outcome.upper)
        if not outcome.complete:
            scope.mark_truncated()
    return _result_from(H, outcome, budget)


def alpha_bruteforce(H: UniformHypergraph) -> int:
    """alpha by scanning every vertex subset; reference oracle for small H."""

    n = H.vertex_count
    if n > BRUTEFORCE_VERTEX_LIMIT:
        raise InputError(
            f"Brute force is limited to {BRUTEFORCE_VERTEX_LIMIT} vertices, got {n}.",
            payload={"field": "hypergraph"},
        )
    if H.edge_count == 0:
        return n

    edge_masks = np.array(H.edge_masks, dtype=np.uint32)
    best = 0
    total = 1 << n
    for start in range(0, total, _BRUTEFORCE_BLOCK):
        subsets = np.arange(start, min(total, start + _BRUTEFORCE_BLOCK), dtype=np.uint32)
        independent = np.ones(subsets.size, dtype=bool)
        for mask in edge_masks:
            independent &= (subsets & mask) != mask
        if independent.any():
            best = max(best, int(np.bitwise_count(subsets[independent]).max()))
    return best
