"""Three-valued decisions built on alpha: the arrow property and the Turan inequality."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset, induced_subhypergraph
from transference_lab.rationals import RationalLike, ceil_fraction, floor_fraction, to_fraction
from transference_lab.validation import validate_epsilon

from .alpha import DEFAULT_NODE_BUDGET, _search

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class DecisionResult:
    """Outcome of ``alpha(H[X]) < target`` with the alpha bounds established on the way."""

    verdict: Verdict
    size: int
    target: int
    lower: int
    upper: int
    node_count: int
    vacuous: bool = False

    @property
    def decided(self) -> bool:
        return self.verdict is not Verdict.UNDECIDED

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS


def _decide_below(
    H: UniformHypergraph, X: VertexSubset, target: int, budget: int
) -> DecisionResult:
    """Decide whether every edge-free subset of X has fewer than ``target`` vertices."""

    if budget < 1:
        raise InputError("budget must be a positive integer.", payload={"field": "budget"})
    size = X.cardinality
    if size == 0:
        return DecisionResult(Verdict.HOLDS, 0, target, 0, 0, 0, vacuous=True)
    induced = induced_subhypergraph(H, X)
    outcome = _search(induced, budget, target)
    if outcome.best >= target:
        verdict = Verdict.FAILS
    elif outcome.complete or outcome.upper < target:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.UNDECIDED
        logger.info(
            "Decision left open: alpha in [%s, %s] against target %s",
            outcome.best,
            outcome.upper,
            target,
        )
    return DecisionResult(
        verdict, size, target, outcome.best, min(outcome.upper, size), outcome.nodes
    )


def arrow_target(epsilon: Fraction, size: int) -> int:
    """Smallest subset size the arrow property quantifies over: ceil(eps |X|)."""

    return ceil_fraction(epsilon * size)


def arrow_decide(
    H: UniformHypergraph,
    X: VertexSubset,
    epsilon: RationalLike,
    budget: int = DEFAULT_NODE_BUDGET,
) -> DecisionResult:
    """Holds when every Y in X with |Y| >= eps |X| spans an edge, i.e. alpha(H[X]) < eps |X|."""

    eps = validate_epsilon(epsilon)
    return _decide_below(H, X, arrow_target(eps, X.cardinality), budget)


def turan_target(pi: Fraction, epsilon: Fraction, size: int) -> int:
    """floor((pi + eps) |X|) + 1: the smallest edge-free size that breaks the inequality."""

    return floor_fraction((pi + epsilon) * size) + 1


def turan_decide(
    H: UniformHypergraph,
    X: VertexSubset,
    pi: RationalLike,
    epsilon: RationalLike,
    budget: int = DEFAULT_NODE_BUDGET,
) -> DecisionResult:
    """Holds when ex(G[X], F) = alpha(H[X]) <= (pi + eps) |X| for a copy hypergraph H."""

    density = to_fraction(pi, field="pi")
    if not 0 <= density < 1:
        raise InputError(f"pi must lie in [0, 1), got {density}.", payload={"field": "pi"})
    eps = validate_epsilon(epsilon)
    return _decide_below(H, X, turan_target(density, eps, X.cardinality), budget)
