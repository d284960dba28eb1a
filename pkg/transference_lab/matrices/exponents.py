"""Threshold exponents: m(A) for linear systems and theta for every family."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from transference_lab.errors import ContractViolationError, InputError

from .classification import classify_matrix
from .model import IntegerMatrix, rank_restricted

if TYPE_CHECKING:
    from transference_lab.generators.spec import ConfigSpec

logger = logging.getLogger(__name__)

RANK_DEFICIENT_WARNING = "rank(A) is smaller than the number of rows"


@dataclass(frozen=True)
class MatrixExponent:
    """m(A) together with the column partition attaining it (0-based columns)."""

    value: Fraction
    W: tuple[int, ...]
    Wbar: tuple[int, ...]
    rank: int
    warnings: tuple[str, ...] = ()


def m_of_matrix(A: IntegerMatrix) -> MatrixExponent:
    """max over W u Wbar = [k], |W| >= 2, of (|W|-1) / (|W|-1+rank(A_Wbar)-rank(A))."""

    classification = classify_matrix(A)
    if not classification.irredundant:
        i, j = classification.failing_pair or (0, 0)
        raise InputError(
            f"Matrix is not irredundant: every solution has x_{i + 1} = x_{j + 1}.",
            payload={"field": "matrix"},
        )
    if not classification.partition_regular:
        raise InputError(
            "Matrix is not partition regular (columns condition fails).",
            payload={"field": "matrix"},
        )

    warnings: list[str] = []
    if A.rank < A.row_count:
        logger.warning("Rank-deficient matrix: rank %s < %s rows", A.rank, A.row_count)
        warnings.append(RANK_DEFICIENT_WARNING)

    k = A.column_count
    best: tuple[Fraction, tuple[int, ...]] | None = None
    for size in range(2, k + 1):
        for W in itertools.combinations(range(k), size):
            Wbar = tuple(c for c in range(k) if c not in W)
            denominator = size - 1 + rank_restricted(A, Wbar) - A.rank
            if denominator <= 0:
                raise ContractViolationError(
                    f"Non-positive denominator {denominator} for W={_one_based(W)}, "
                    f"Wbar={_one_based(Wbar)}.",
                    payload={"W": _one_based(W), "Wbar": _one_based(Wbar)},
                )
            value = Fraction(size - 1, denominator)
            if best is None or value > best[0] or (value == best[0] and W < best[1]):
                best = (value, W)

    if best is None:
        raise InputError("m(A) needs at least two columns.", payload={"field": "matrix"})
    value, W = best
    return MatrixExponent(
        value=value,
        W=W,
        Wbar=tuple(c for c in range(k) if c not in W),
        rank=A.rank,
        warnings=tuple(warnings),
    )


def threshold_exponent(spec: ConfigSpec) -> Fraction:
    """theta with p_n = n^(-theta) for the family described by ``spec``."""

    from transference_lab.density.exponents import m_of_hypergraph
    from transference_lab.generators.spec import FamilyVariant

    if spec.variant is FamilyVariant.AP:
        return Fraction(1, spec.k - 1)
    if spec.variant is FamilyVariant.HOMOTHETIC:
        return Fraction(1, len(spec.points) - 1)
    if spec.variant in (FamilyVariant.LINEAR, FamilyVariant.SCHUR):
        return 1 / m_of_matrix(spec.linear_matrix).value
    if spec.variant is FamilyVariant.FCOPIES:
        return 1 / m_of_hypergraph(spec.require_pattern()).m
    raise InputError(f"Unsupported family variant {spec.variant!r}.")


def _one_based(columns: tuple[int, ...]) -> list[int]:
    return [c + 1 for c in columns]
