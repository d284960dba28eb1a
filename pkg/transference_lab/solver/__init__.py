"""Independence numbers of hypergraphs and the decisions that reduce to them."""

from .alpha import (
    BRUTEFORCE_VERTEX_LIMIT,
    DEFAULT_NODE_BUDGET,
    SolveResult,
    alpha_bruteforce,
    alpha_exact,
    deletion_free_subset,
    greedy_independent_set,
)
from .decisions import (
    DecisionResult,
    Verdict,
    arrow_decide,
    arrow_target,
    turan_decide,
    turan_target,
)
from .turan import copy_hypergraph, host_subset, turan_ex

__all__ = [
    "BRUTEFORCE_VERTEX_LIMIT",
    "DEFAULT_NODE_BUDGET",
    "SolveResult",
    "alpha_bruteforce",
    "alpha_exact",
    "deletion_free_subset",
    "greedy_independent_set",
    "DecisionResult",
    "Verdict",
    "arrow_decide",
    "arrow_target",
    "turan_decide",
    "turan_target",
    "copy_hypergraph",
    "host_subset",
    "turan_ex",
]
