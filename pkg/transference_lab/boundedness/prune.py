"""Greedy deletion check: few sampled vertices carry most of sum_v deg_i^2."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset, deg_i_vector
from transference_lab.randomness import Stream, bernoulli_flags, philox_rng
from transference_lab.validation import validate_probability

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PruneResult:
    """``ok`` means the greedy deletion reached the bound; failure is "not certified"."""

    ok: bool
    deleted: VertexSubset
    achieved_sum: int
    initial_sum: int
    bound: float
    sampled: VertexSubset
    deletion_budget: int


def prune_bound(H: UniformHypergraph, q: float, i: int, K: float) -> float:
    """4^k k^2 K q^(2i) |E|^2 / |V|."""

    k = H.uniformity
    if H.vertex_count == 0:
        return 0.0
    return 4**k * k**2 * K * q ** (2 * i) * H.edge_count**2 / H.vertex_count


def _removal_change(
    H: UniformHypergraph,
    u: int,
    present: np.ndarray,
    hits: np.ndarray,
    degrees: np.ndarray,
    i: int,
) -> int:
    """Change of sum_v deg_i(v)^2 when u leaves the sample."""

    delta: dict[int, int] = {}
    for position in H.incidence[u]:
        count = int(hits[position])
        for v in H.edges[position]:
            # edge keeps qualifying for v unless u was one of exactly i hits outside v
            if v != u and count - int(present[v]) == i:
                delta[v] = delta.get(v, 0) - 1
    return sum(2 * int(degrees[v]) * d + d * d for v, d in delta.items())


def prune_check(
    H: UniformHypergraph,
    q: float,
    i: int,
    eta: float,
    K: float,
    seed: int,
    *,
    trial: int = 0,
) -> PruneResult:
    """Sample V_q, then delete up to floor(eta q |V|) sampled vertices greedily."""

    q = validate_probability(q)
    if not 1 <= i <= H.uniformity - 1:
        raise InputError(f"i must lie in [1, {H.uniformity - 1}], got {i}.", payload={"field": "i"})
    if not eta > 0:
        raise InputError(f"eta must be positive, got {eta}.", payload={"field": "eta"})
    if K < 0:
        raise InputError(f"K must be non-negative, got {K}.", payload={"field": "K"})

    rng = philox_rng(seed, Stream.PRUNE, trial)
    present = bernoulli_flags(rng, H.vertex_count, q)
    sampled = VertexSubset.from_bools(present)
    present = present.copy()

    degrees = deg_i_vector(H, present, i)
    hits = (
        present[H.edge_array].sum(axis=1) if H.edge_count else np.zeros(0, dtype=np.int64)
    ).astype(np.int64)
    total = int(np.dot(degrees, degrees))
    initial = total
    budget = math.floor(eta * q * H.vertex_count)
    bound = prune_bound(H, q, i, K)

    deleted: list[int] = []
    while len(deleted) < budget and total > 0:
        best: tuple[int, int] | None = None
        for u in np.flatnonzero(present):
            change = _removal_change(H, int(u), present, hits, degrees, i)
            if best is None or change < best[0]:
                best = (change, int(u))
        if best is None or best[0] >= 0:
            break
        change, u = best
        present[u] = False
        if H.incidence[u]:
            hits[list(H.incidence[u])] -= 1
        degrees = deg_i_vector(H, present, i)
        total += change
        deleted.append(u)

    logger.debug(
        "Prune check deleted %s of %s allowed vertices; sum %s -> %s (bound %.6g)",
        len(deleted),
        budget,
        initial,
        total,
        bound,
    )
    return PruneResult(
        ok=total <= bound,
        deleted=VertexSubset(H.vertex_count, tuple(deleted)),
        achieved_sum=total,
        initial_sum=initial,
        bound=bound,
        sampled=sampled,
        deletion_budget=budget,
    )
