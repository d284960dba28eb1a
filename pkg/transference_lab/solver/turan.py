"""ex(G, F) for sub-hypergraphs G of K_n^(l), computed as alpha of the copy hypergraph."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from functools import lru_cache

from transference_lab.errors import InputError
from transference_lab.generators import colex_rank, colex_subsets, gen_fcopies
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset, induced_subhypergraph
from transference_lab.validation import validate_positive_int

from .alpha import DEFAULT_NODE_BUDGET, SolveResult, alpha_exact

logger = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def copy_hypergraph(n: int, dimension: int, F: UniformHypergraph) -> UniformHypergraph:
    """gen_fcopies, except that K_n^(l) with n < v(F) yields an edgeless hypergraph."""

    validate_positive_int(n, field="n")
    if n >= F.vertex_count:
        return gen_fcopies(n, dimension, F)
    if F.edge_count < 2 or F.uniformity != dimension:
        # same validation as the non-degenerate case
        gen_fcopies(F.vertex_count, dimension, F)
    labels = tuple(tuple(c + 1 for c in subset) for subset in colex_subsets(n, dimension))
    return UniformHypergraph._trusted(F.edge_count, len(labels), (), labels)


def host_subset(n: int, dimension: int, edges: Iterable[Sequence[int]]) -> VertexSubset:
    """Host graph given by 1-based edges, as a subset of the colex-ordered l-subsets of [n]."""

    ranks = []
    for edge in edges:
        members = tuple(sorted(int(v) - 1 for v in edge))
        if (
            len(members) != dimension
            or len(set(members)) != dimension
            or members[0] < 0
            or members[-1] >= n
        ):
            raise InputError(
                f"Host edge {tuple(edge)} is not a {dimension}-subset of [1, {n}].",
                payload={"field": "host"},
            )
        ranks.append(colex_rank(members))
    return VertexSubset(math.comb(n, dimension), tuple(sorted(set(ranks))))


def turan_ex(
    n: int,
    dimension: int,
    F: UniformHypergraph,
    host: VertexSubset | None = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> SolveResult:
    """Largest F-free edge set of the host G (all of K_n^(l) when ``host`` is None).

    The witness is expressed in the universe of all l-subsets of [n].
    """

    H = copy_hypergraph(n, dimension, F)
    universe = math.comb(n, dimension)
    if host is None:
        host = VertexSubset.full(universe)
    if host.universe != universe:
        raise InputError(
            f"Host lives on {host.universe} edges, K_{n}^({dimension}) has {universe}.",
            payload={"field": "host"},
        )
    induced = induced_subhypergraph(H, host)
    result = alpha_exact(induced, budget)
    witness = VertexSubset(universe, tuple(host.members[i] for i in result.witness.members))
    logger.debug(
        "ex over %s host edges with %s copies: %s (exact=%s)",
        host.cardinality,
        induced.edge_count,
        result.alpha,
        result.exact,
    )
    return SolveResult(
        alpha=result.alpha,
        witness=witness,
        node_count=result.node_count,
        exact=result.exact,
        lower=result.lower,
        upper=result.upper,
    )
