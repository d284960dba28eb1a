"""Binomial tails and the joint tail probability behind mu_i."""

from __future__ import annotations

from scipy.stats import binom

from transference_lab.errors import InputError
from transference_lab.validation import validate_probability


def binomial_tail(trials: int, at_least: int, q: float) -> float:
    """P[Bin(trials, q) >= at_least], exact at the boundary cases."""

    if at_least <= 0:
        return 1.0
    if at_least > trials:
        return 0.0
    if q <= 0.0:
        return 0.0
    if q >= 1.0:
        return 1.0
    return float(binom.sf(at_least - 1, trials, q))


def joint_tail_prob(a: int, b: int, t: int, i: int, q: float) -> float:
    """P[|A n S| >= i and |B n S| >= i] with |A n B| = t, |A \\ B| = a, |B \\ A| = b.

    S is an independent q-sample; conditioning on the s shared hits
    splits the event into two independent binomial tails.
    """

    for name, value in (("a", a), ("b", b), ("t", t)):
        if value < 0:
            raise InputError(
                f"'{name}' must be non-negative, got {value}.", payload={"field": name}
            )
    if i < 1:
        raise InputError(f"'i' must be at least 1, got {i}.", payload={"field": "i"})
    q = validate_probability(q)

    if q == 0.0:
        return 0.0
    if q == 1.0:
        return 1.0 if a + t >= i and b + t >= i else 0.0

    total = 0.0
    for shared in range(t + 1):
        weight = float(binom.pmf(shared, t, q))
        if weight == 0.0:
            continue
        total += weight * binomial_tail(a, i - shared, q) * binomial_tail(b, i - shared, q)
    return min(1.0, total)
