"""mu_i evaluation, (K, p)-boundedness grids and the deletion check."""

from .certify import (
    BoundednessReport,
    BoundednessRow,
    QGrid,
    bound_ratio,
    certify_boundedness,
)
from .mu import (
    MonteCarloEstimate,
    OverlapProfile,
    mu_exact,
    mu_montecarlo,
    sampled_degree_square_sum,
)
from .prune import PruneResult, prune_bound, prune_check
from .tails import binomial_tail, joint_tail_prob

__all__ = [
    "BoundednessReport",
    "BoundednessRow",
    "QGrid",
    "bound_ratio",
    "certify_boundedness",
    "MonteCarloEstimate",
    "OverlapProfile",
    "mu_exact",
    "mu_montecarlo",
    "sampled_degree_square_sum",
    "PruneResult",
    "prune_bound",
    "prune_check",
    "binomial_tail",
    "joint_tail_prob",
]
