"""Exact integer matrices and rational rank computations."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from transference_lab.errors import InputError


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""

    matrix = [list(row) for row in rows]
    if not matrix or not matrix[0]:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            factor = matrix[r][col]
            for c in range(col, n_cols):
                # exact: Bareiss guarantees divisibility
                matrix[r][c] = (pivot * matrix[r][c] - factor * matrix[rank][c]) // previous_pivot
        previous_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form over the rationals."""

    rows: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self, n_cols: int) -> tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(col for col in range(n_cols) if col not in pivot_set)


def reduced_echelon(rows: Sequence[Sequence[int | Fraction]]) -> Echelon:
    """Gauss-Jordan elimination with exact Fractions."""

    matrix = [[Fraction(value) for value in row] for row in rows]
    if not matrix or not matrix[0]:
        return Echelon(rows=(), pivots=())
    n_rows, n_cols = len(matrix), len(matrix[0])
    pivots: list[int] = []
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        found = next((r for r in range(pivot_row, n_rows) if matrix[r][col] != 0), None)
        if found is None:
            continue
        matrix[pivot_row], matrix[found] = matrix[found], matrix[pivot_row]
        lead = matrix[pivot_row][col]
        matrix[pivot_row] = [value / lead for value in matrix[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [
                    a - factor * b for a, b in zip(matrix[r], matrix[pivot_row], strict=True)
                ]
        pivots.append(col)
        pivot_row += 1
    return Echelon(rows=tuple(tuple(row) for row in matrix[: len(pivots)]), pivots=tuple(pivots))


@dataclass(frozen=True)
class IntegerMatrix:
    """An l x k matrix of exact integers with columns indexed ``0..k-1``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        normalized = tuple(tuple(_as_int(value) for value in row) for row in self.rows)
        if not normalized or not normalized[0]:
            raise InputError(
                "A matrix needs at least one row and one column.", payload={"field": "matrix"}
            )
        width = len(normalized[0])
        if any(len(row) != width for row in normalized):
            raise InputError(
                "Every matrix row must have the same length.", payload={"field": "matrix"}
            )
        object.__setattr__(self, "rows", normalized)

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> IntegerMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return len(self.rows[0])

    @cached_property
    def rank(self) -> int:
        return bareiss_rank(self.rows)

    def column(self, index: int) -> tuple[int, ...]:
        return tuple(row[index] for row in self.rows)

    def restrict_columns(self, columns: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        selected = tuple(columns)
        return tuple(tuple(row[c] for c in selected) for row in self.rows)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _as_int(value: object) -> int:
    if isinstance(value, bool):
        raise InputError("Matrix entries must be integers.", payload={"field": "matrix"})
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    if hasattr(value, "__index__"):
        return int(value)  # type: ignore[call-overload]
    raise InputError(f"Matrix entry {value!r} is not an integer.", payload={"field": "matrix"})


def rank_restricted(A: IntegerMatrix, Wbar: Iterable[int]) -> int:
    """Rank of the columns of A indexed by ``Wbar`` (0 when empty)."""

    columns = sorted(set(Wbar))
    for index in columns:
        if not 0 <= index < A.column_count:
            raise InputError(
                f"Column index {index} is outside 0..{A.column_count - 1}.",
                payload={"field": "Wbar", "value": index},
            )
    if not columns:
        return 0
    return bareiss_rank(A.restrict_columns(columns))


def ap_matrix(k: int) -> IntegerMatrix:
    """The (k-2) x k system x_j - 2x_{j+1} + x_{j+2} = 0 describing k-term progressions."""

    if k < 3:
        raise InputError(f"Progression length must be at least 3, got {k}.", payload={"field": "k"})
    rows = []
    for j in range(k - 2):
        row = [0] * k
        row[j], row[j + 1], row[j + 2] = 1, -2, 1
        rows.append(tuple(row))
    return IntegerMatrix(tuple(rows))


def schur_matrix() -> IntegerMatrix:
    """The single equation x_1 + x_2 - x_3 = 0."""

    return IntegerMatrix(((1, 1, -1),))
