"""Irredundancy, Rado's columns condition and density regularity."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .model import IntegerMatrix, bareiss_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixClassification:
    """Classification of a homogeneous system ``A x = 0``.

    ``column_blocks`` is the columns-condition partition when the matrix is
    partition regular; ``failing_pair`` is a column pair (i, j) whose
    hyperplane x_i = x_j contains the whole kernel when irredundancy fails.
    """

    irredundant: bool
    partition_regular: bool
    density_regular: bool
    column_blocks: tuple[tuple[int, ...], ...] | None = None
    failing_pair: tuple[int, int] | None = None


def _with_extra_row(A: IntegerMatrix, extra: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return A.rows + (extra,)


def irredundancy_witness(A: IntegerMatrix) -> tuple[int, int] | None:
    """First pair (i, j) with ker(A) inside {x_i = x_j}, or None if irredundant.

    ker(A) lies in that hyperplane exactly when e_i - e_j is in the row space.
    """

    k = A.column_count
    for i, j in itertools.combinations(range(k), 2):
        difference = [0] * k
        difference[i], difference[j] = 1, -1
        if bareiss_rank(_with_extra_row(A, tuple(difference))) == A.rank:
            return (i, j)
    return None


def is_irredundant(A: IntegerMatrix) -> bool:
    return irredundancy_witness(A) is None


def _in_span(span_rows: list[tuple[int, ...]], span_rank: int, vector: tuple[int, ...]) -> bool:
    if not any(vector):
        return True
    if span_rank == 0:
        return False
    return bareiss_rank(span_rows + [vector]) == span_rank


def columns_condition(A: IntegerMatrix) -> tuple[tuple[int, ...], ...] | None:
    """Blocks I_1, ..., I_t satisfying Rado's columns condition, or None.

    The first block sums to zero and every later block sums into the span of
    the columns already used. Any block valid at one step stays valid after
    another valid block is taken, so extending greedily by the smallest valid
    block is complete.
    """

    k = A.column_count
    columns = [A.column(index) for index in range(k)]
    remaining = list(range(k))
    used_columns: list[tuple[int, ...]] = []
    used_rank = 0
    blocks: list[tuple[int, ...]] = []

    while remaining:
        chosen: tuple[int, ...] | None = None
        for size in range(1, len(remaining) + 1):
            for block in itertools.combinations(remaining, size):
                total = tuple(sum(row[c] for c in block) for row in A.rows)
                if blocks:
                    valid = _in_span(used_columns, used_rank, total)
                else:
                    valid = not any(total)
                if valid:
                    chosen = block
                    break
            if chosen is not None:
                break
        if chosen is None:
            logger.debug("Columns condition fails with %s columns left", len(remaining))
            return None
        blocks.append(chosen)
        used_columns.extend(columns[c] for c in chosen)
        used_rank = bareiss_rank(used_columns)
        remaining = [c for c in remaining if c not in chosen]

    return tuple(blocks)


def classify_matrix(A: IntegerMatrix) -> MatrixClassification:
    failing_pair = irredundancy_witness(A)
    blocks = columns_condition(A)
    partition_regular = blocks is not None
    density_regular = partition_regular and failing_pair is None and not any(A.row_sums())
    return MatrixClassification(
        irredundant=failing_pair is None,
        partition_regular=partition_regular,
        density_regular=density_regular,
        column_blocks=blocks,
        failing_pair=failing_pair,
    )
