"""Binomial random subsets V_q of an indexed ground set."""

from __future__ import annotations

from transference_lab.hypergraphs import VertexSubset
from transference_lab.randomness import Stream, bernoulli_flags, philox_rng
from transference_lab.validation import validate_positive_int, validate_probability


def sample_subset(
    m: int, q: float, seed: int, *, q_index: int = 0, trial: int = 0
) -> VertexSubset:
    """Keep each of ``m`` indices independently with probability ``q``.

    The draw is a pure function of ``(m, q, seed, q_index, trial)``: the
    Philox stream is keyed by the sampling stream, the schedule position and
    the trial number.
    """

    validate_positive_int(m, field="m", minimum=0)
    q = validate_probability(q)
    validate_positive_int(seed, field="seed", minimum=0)
    rng = philox_rng(seed, Stream.SAMPLING, q_index, trial)
    return VertexSubset.from_bools(bernoulli_flags(rng, m, q))
