"""First and second moments of V_q and of the edges surviving in H[V_q]."""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph
from transference_lab.parallel import map_ordered
from transference_lab.randomness import Stream, bernoulli_flags, philox_rng
from transference_lab.solver import deletion_free_subset
from transference_lab.validation import validate_positive_int, validate_probability

logger = logging.getLogger(__name__)

_TRIALS_PER_TASK = 1_000


def expected_counts(H: UniformHypergraph, q: float) -> tuple[float, float]:
    """(q |V|, q^k |E|)."""

    q = validate_probability(q)
    return q * H.vertex_count, q**H.uniformity * H.edge_count


def pair_intersection_counts(H: UniformHypergraph) -> tuple[int, ...]:
    """``counts[t]`` = number of ordered edge pairs (e, e') with |e n e'| = t.

    From A_j = sum over j-sets T of d(T)^2 = sum_t counts[t] C(t, j) by the
    binomial inversion counts[t] = sum_j (-1)^(j-t) C(j, t) A_j.
    """

    k = H.uniformity
    square_sums = [H.edge_count**2]
    for j in range(1, k + 1):
        codegrees: Counter[tuple[int, ...]] = Counter()
        for edge in H.edges:
            codegrees.update(itertools.combinations(edge, j))
        square_sums.append(sum(d * d for d in codegrees.values()))
    return tuple(
        sum((-1) ** (j - t) * math.comb(j, t) * square_sums[j] for j in range(t, k + 1))
        for t in range(k + 1)
    )


@dataclass(frozen=True)
class EdgeMoments:
    q: float
    expected_vertices: float
    mean: float
    variance: float
    pair_counts: tuple[int, ...]

    @property
    def standard_deviation(self) -> float:
        return math.sqrt(max(self.variance, 0.0))


def surviving_edge_moments(H: UniformHypergraph, q: float) -> EdgeMoments:
    """Mean q^k |E| and variance sum_{e,e'} (q^|e u e'| - q^(2k)) of e(H[V_q])."""

    q = validate_probability(q)
    k = H.uniformity
    counts = pair_intersection_counts(H)
    variance = sum(
        count * (q ** (2 * k - t) - q ** (2 * k)) for t, count in enumerate(counts) if t and count
    )
    return EdgeMoments(
        q=q,
        expected_vertices=q * H.vertex_count,
        mean=q**k * H.edge_count,
        variance=float(variance),
        pair_counts=counts,
    )


def chebyshev_upper(H: UniformHypergraph, q: float, slack: float) -> float:
    """Chebyshev bound on P[e(H[V_q]) >= (1 + slack) q^k |E|]."""

    if not slack > 0:
        raise InputError(f"slack must be positive, got {slack}.", payload={"field": "slack"})
    moments = surviving_edge_moments(H, q)
    if moments.mean == 0:
        return 0.0
    return min(1.0, moments.variance / (slack * moments.mean) ** 2)


@dataclass(frozen=True)
class MomentCheck:
    expected: float
    empirical_mean: float
    empirical_sd: float
    z_score: float


@dataclass(frozen=True)
class MomentValidation:
    q: float
    trials: int
    vertices: MomentCheck
    edges: MomentCheck

    @property
    def within_four_sd(self) -> bool:
        return abs(self.vertices.z_score) <= 4 and abs(self.edges.z_score) <= 4


def _moment_chunk(
    shared: tuple[UniformHypergraph, float, int], trial_range: tuple[int, int]
) -> list[tuple[int, int]]:
    H, q, seed = shared
    samples = []
    for trial in range(*trial_range):
        flags = bernoulli_flags(philox_rng(seed, Stream.MOMENTS, trial), H.vertex_count, q)
        surviving = int(flags[H.edge_array].all(axis=1).sum()) if H.edge_count else 0
        samples.append((int(flags.sum()), surviving))
    return samples


def _check(values: np.ndarray, expected: float, variance: float) -> MomentCheck:
    trials = values.size
    mean = float(values.mean())
    sd = float(values.std(ddof=1)) if trials > 1 else 0.0
    standard_error = math.sqrt(variance / trials)
    if standard_error > 0:
        z = (mean - expected) / standard_error
    else:
        z = 0.0 if math.isclose(mean, expected, abs_tol=1e-12) else math.inf
    return MomentCheck(expected=expected, empirical_mean=mean, empirical_sd=sd, z_score=z)


def validate_first_moments(
    H: UniformHypergraph, q: float, trials: int, seed: int, *, jobs: int = 1
) -> MomentValidation:
    """Compare sampled |V_q| and e(H[V_q]) with their exact means.

    z-scores use the exact variances, so they measure the distance of the
    empirical mean from the expectation in standard errors.
    """

    q = validate_probability(q)
    validate_positive_int(trials, field="trials")
    ranges = [
        (start, min(trials, start + _TRIALS_PER_TASK))
        for start in range(0, trials, _TRIALS_PER_TASK)
    ]
    chunks = map_ordered(_moment_chunk, ranges, shared=(H, q, seed), jobs=jobs)
    samples = np.array(list(itertools.chain.from_iterable(chunks)), dtype=np.float64)

    moments = surviving_edge_moments(H, q)
    vertex_variance = H.vertex_count * q * (1 - q)
    validation = MomentValidation(
        q=q,
        trials=trials,
        vertices=_check(samples[:, 0], moments.expected_vertices, vertex_variance),
        edges=_check(samples[:, 1], moments.mean, moments.variance),
    )
    logger.debug(
        "First moments at q=%s: vertices z=%.3f, edges z=%.3f",
        q,
        validation.vertices.z_score,
        validation.edges.z_score,
    )
    return validation


__all__ = [
    "EdgeMoments",
    "MomentCheck",
    "MomentValidation",
    "chebyshev_upper",
    "deletion_free_subset",
    "expected_counts",
    "pair_intersection_counts",
    "surviving_edge_moments",
    "validate_first_moments",
]
