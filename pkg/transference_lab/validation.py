"""Validation helpers for operation inputs."""

from __future__ import annotations

import math
from fractions import Fraction

from transference_lab.errors import InputError
from transference_lab.rationals import RationalLike, to_fraction


def validate_probability(value: float | int | Fraction, *, field: str = "q") -> float:
    """Ensure ``value`` is a probability in [0, 1] and return it as a float."""

    try:
        probability = float(value)
    except (TypeError, ValueError) as exc:
        raise InputError(f"'{field}' must be a number.", payload={"field": field}) from exc

    if math.isnan(probability) or not 0.0 <= probability <= 1.0:
        raise InputError(
            f"'{field}' must lie in [0, 1], got {value!r}.",
            payload={"field": field, "value": str(value)},
        )
    return probability


def validate_positive_int(value: int, *, field: str, minimum: int = 1) -> int:
    """Ensure ``value`` is an integer no smaller than ``minimum``."""

    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"'{field}' must be an integer.", payload={"field": field})
    if value < minimum:
        raise InputError(
            f"'{field}' must be at least {minimum}, got {value}.",
            payload={"field": field, "value": value},
        )
    return value


def validate_int_range(value: int, *, field: str, low: int, high: int) -> int:
    """Ensure ``low <= value <= high``."""

    validate_positive_int(value, field=field, minimum=low)
    if value > high:
        raise InputError(
            f"'{field}' must lie in [{low}, {high}], got {value}.",
            payload={"field": field, "value": value},
        )
    return value


def validate_epsilon(value: RationalLike, *, field: str = "epsilon") -> Fraction:
    """Ensure ``0 < epsilon <= 1`` with exact arithmetic."""

    epsilon = to_fraction(value, field=field)
    if not 0 < epsilon <= 1:
        raise InputError(
            f"'{field}' must satisfy 0 < {field} <= 1, got {epsilon}.",
            payload={"field": field, "value": str(epsilon)},
        )
    return epsilon
