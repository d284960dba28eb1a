"""Distinct-valued solutions of homogeneous linear systems over [n]."""

from __future__ import annotations

import logging
import math

import numpy as np

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph
from transference_lab.matrices import (
    IntegerMatrix,
    irredundancy_witness,
    reduced_echelon,
    schur_matrix,
)
from transference_lab.validation import validate_positive_int

logger = logging.getLogger(__name__)

# free-value grid rows evaluated per numpy block
_BLOCK_ROWS = 1 << 18


def _integer_parametrization(
    A: IntegerMatrix,
) -> tuple[tuple[int, ...], tuple[int, ...], np.ndarray, np.ndarray]:
    """Pivot and free columns with bound coordinates ``x_p = -(C @ x_free) / D``."""

    echelon = reduced_echelon(A.rows)
    free = echelon.free_columns(A.column_count)
    coefficients = np.zeros((echelon.rank, len(free)), dtype=np.int64)
    scales = np.ones(echelon.rank, dtype=np.int64)
    for r, row in enumerate(echelon.rows):
        scale = math.lcm(*(row[c].denominator for c in free)) if free else 1
        scales[r] = scale
        for position, c in enumerate(free):
            value = row[c] * scale
            coefficients[r, position] = value.numerator
    return echelon.pivots, free, coefficients, scales


def gen_linear(A: IntegerMatrix, n: int) -> UniformHypergraph:
    """Edges {x_1, ..., x_k} for every solution of Ax = 0 in [n]^k with distinct values.

    The bound coordinates are solved from the reduced echelon form, so only
    the n^(k - rank) free assignments are scanned.
    """

    validate_positive_int(n, field="n")
    pair = irredundancy_witness(A)
    if pair is not None:
        raise InputError(
            f"Matrix is not irredundant: x_{pair[0] + 1} = x_{pair[1] + 1} on every solution.",
            payload={"field": "matrix"},
        )
    if A.rank < A.row_count:
        raise InputError(
            f"Matrix has rank {A.rank} but {A.row_count} rows.", payload={"field": "matrix"}
        )

    k = A.column_count
    pivots, free, coefficients, scales = _integer_parametrization(A)
    labels = tuple(range(1, n + 1))
    if not free:
        return UniformHypergraph._trusted(k, n, (), labels)

    total = n ** len(free)
    found: list[np.ndarray] = []
    for start in range(0, total, _BLOCK_ROWS):
        flat = np.arange(start, min(total, start + _BLOCK_ROWS), dtype=np.int64)
        free_values = np.stack(np.unravel_index(flat, (n,) * len(free)), axis=1) + 1
        numerators = -(free_values @ coefficients.T)
        integral = (numerators % scales == 0).all(axis=1)
        bound = numerators // scales
        in_range = ((bound >= 1) & (bound <= n)).all(axis=1)
        keep = integral & in_range
        if not keep.any():
            continue

        solutions = np.empty((int(keep.sum()), k), dtype=np.int64)
        solutions[:, list(free)] = free_values[keep]
        solutions[:, list(pivots)] = bound[keep]
        solutions.sort(axis=1)
        distinct = (np.diff(solutions, axis=1) != 0).all(axis=1)
        if distinct.any():
            found.append(solutions[distinct] - 1)

    if not found:
        return UniformHypergraph._trusted(k, n, (), labels)
    unique = np.unique(np.concatenate(found), axis=0)
    edges = tuple(tuple(int(v) for v in row) for row in unique)
    logger.debug("Linear system on [%s] produced %s edges", n, len(edges))
    return UniformHypergraph._trusted(k, n, edges, labels)


def gen_schur(n: int) -> UniformHypergraph:
    """Schur triples {x, y, x + y} of distinct elements of [n]."""

    return gen_linear(schur_matrix(), n)
