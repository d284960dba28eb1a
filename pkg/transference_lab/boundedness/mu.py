"""mu_i(H, q) = E[sum_v deg_i(v, V_q)^2], exactly and by sampling."""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph, deg_i_vector
from transference_lab.parallel import map_ordered
from transference_lab.randomness import Stream, bernoulli_flags, philox_rng
from transference_lab.validation import validate_positive_int, validate_probability

from .tails import joint_tail_prob

logger = logging.getLogger(__name__)

_TRIALS_PER_TASK = 500


@dataclass(frozen=True)
class OverlapProfile:
    """``counts[t]`` = #{(v, e, e') : v in e n e', |(e n e') \\ {v}| = t}."""

    uniformity: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @classmethod
    def of(cls, H: UniformHypergraph) -> OverlapProfile:
        """Recover the profile from co-degree square sums.

        With d(T) the number of edges containing T,
        S_j = j * sum_{|T|=j} d(T)^2 = sum_t N[t] C(t, j-1), which is inverted
        by the binomial transform.
        """

        k = H.uniformity
        square_sums = []
        for j in range(1, k + 1):
            codegrees: Counter[tuple[int, ...]] = Counter()
            for edge in H.edges:
                codegrees.update(itertools.combinations(edge, j))
            square_sums.append(j * sum(d * d for d in codegrees.values()))

        counts = []
        for t in range(k):
            value = sum(
                (-1) ** (r - t) * math.comb(r, t) * square_sums[r] for r in range(t, k)
            )
            counts.append(value)
        return cls(uniformity=k, counts=tuple(counts))


def _check_level(H: UniformHypergraph, i: int) -> None:
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= H.uniformity - 1:
        raise InputError(
            f"i must lie in [1, {H.uniformity - 1}], got {i!r}.", payload={"field": "i"}
        )


def mu_exact(
    H: UniformHypergraph, i: int, q: float, *, profile: OverlapProfile | None = None
) -> float:
    _check_level(H, i)
    q = validate_probability(q)
    profile = profile or OverlapProfile.of(H)
    k = H.uniformity
    return float(
        sum(
            count * joint_tail_prob(k - 1 - t, k - 1 - t, t, i, q)
            for t, count in enumerate(profile.counts)
            if count
        )
    )


@dataclass(frozen=True)
class MonteCarloEstimate:
    estimate: float
    standard_error: float
    trials: int


def sampled_degree_square_sum(H: UniformHypergraph, flags: np.ndarray, i: int) -> int:
    degrees = deg_i_vector(H, flags, i)
    return int(np.dot(degrees, degrees))


def _mu_chunk(
    shared: tuple[UniformHypergraph, int, float, int], trial_range: tuple[int, int]
) -> list[int]:
    H, i, q, seed = shared
    values = []
    for trial in range(*trial_range):
        rng = philox_rng(seed, Stream.MU, trial)
        values.append(sampled_degree_square_sum(H, bernoulli_flags(rng, H.vertex_count, q), i))
    return values


def mu_montecarlo(
    H: UniformHypergraph, i: int, q: float, trials: int, seed: int, *, jobs: int = 1
) -> MonteCarloEstimate:
    """Mean of sum_v deg_i(v, V_q)^2 over seeded samples, with its standard error."""

    _check_level(H, i)
    q = validate_probability(q)
    validate_positive_int(trials, field="trials")

    ranges = [
        (start, min(trials, start + _TRIALS_PER_TASK))
        for start in range(0, trials, _TRIALS_PER_TASK)
    ]
    chunks = map_ordered(_mu_chunk, ranges, shared=(H, i, q, seed), jobs=jobs)
    values = np.fromiter(itertools.chain.from_iterable(chunks), dtype=np.float64, count=trials)
    estimate = float(values.mean())
    error = float(values.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    logger.debug(
        "mu_%s Monte-Carlo estimate %.6g +- %.3g over %s trials", i, estimate, error, trials
    )
    return MonteCarloEstimate(estimate=estimate, standard_error=error, trials=trials)
