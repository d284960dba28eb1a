"""Shared helpers for exact rational arithmetic and its text form."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from transference_lab.errors import InputError

RationalLike = Fraction | int | str


def to_fraction(value: RationalLike | Rational, *, field: str = "value") -> Fraction:
    """Convert ints, Fractions and ``"p/q"``/decimal strings into a Fraction.

    Floats are refused: every rational that reaches a comparison must be exact.
    """

    if isinstance(value, bool):
        raise InputError(f"'{field}' must be a rational number.", payload={"field": field})
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value, field=field)
    raise InputError(
        f"'{field}' must be an exact rational (int, Fraction or 'p/q' string), "
        f"got {type(value).__name__}.",
        payload={"field": field},
    )


def parse_rational(text: str, *, field: str = "value") -> Fraction:
    """Parse ``"3/5"``, ``"0.6"`` or ``"2"`` exactly."""

    candidate = str(text).strip()
    if not candidate:
        raise InputError(f"'{field}' cannot be blank.", payload={"field": field})
    try:
        return Fraction(candidate)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(
            f"'{field}' is not a rational number: {candidate!r}", payload={"field": field}
        ) from exc


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when integral."""

    fraction = Fraction(value)
    if fraction.denominator == 1:
        return str(fraction.numerator)
    return f"{fraction.numerator}/{fraction.denominator}"


def ceil_fraction(value: Fraction) -> int:
    """Exact ceiling of a rational."""

    return -((-value.numerator) // value.denominator)


def floor_fraction(value: Fraction) -> int:
    """Exact floor of a rational."""

    return value.numerator // value.denominator
