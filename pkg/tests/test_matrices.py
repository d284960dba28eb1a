from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest

from transference_lab.errors import FormatError, InputError
from transference_lab.generators import ConfigSpec, complete_pattern
from transference_lab.matrices import (
    IntegerMatrix,
    ap_matrix,
    bareiss_rank,
    classify_matrix,
    columns_condition,
    dump_matrix,
    irredundancy_witness,
    is_irredundant,
    load_matrix,
    m_of_matrix,
    rank_restricted,
    read_matrix,
    reduced_echelon,
    schur_matrix,
    threshold_exponent,
)
from transference_lab.matrices.exponents import RANK_DEFICIENT_WARNING
from transference_lab.matrices.schemas import MatrixClassificationSchema, MatrixExponentSchema

pytestmark = pytest.mark.exact


def test_bareiss_rank_matches_echelon_rank():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, -1]]

    assert bareiss_rank(rows) == 2
    assert reduced_echelon(rows).rank == 2
    assert reduced_echelon(rows).pivots == (0, 1)


def _random_integer_matrices(count, seed=11):
    """Small integer matrices, half of them built as products to force low rank."""

    rng = np.random.default_rng(seed)
    matrices = []
    for index in range(count):
        rows, cols = int(rng.integers(1, 5)), int(rng.integers(1, 6))
        if index % 2:
            inner = int(rng.integers(1, min(rows, cols) + 1))
            left = rng.integers(-3, 4, size=(rows, inner))
            right = rng.integers(-3, 4, size=(inner, cols))
            values = left @ right
        else:
            values = rng.integers(-4, 5, size=(rows, cols))
        matrices.append(values.tolist())
    return matrices


def test_exact_ranks_agree_with_numpy_on_random_matrices():
    for rows in _random_integer_matrices(200):
        expected = int(np.linalg.matrix_rank(np.array(rows, dtype=float)))

        assert bareiss_rank(rows) == expected
        assert reduced_echelon(rows).rank == expected
        assert IntegerMatrix.of(rows).rank == expected


def test_rank_restricted_is_monotone_and_bounded_on_random_matrices():
    for rows in _random_integer_matrices(200, seed=23):
        A = IntegerMatrix.of(rows)
        columns = range(A.column_count)
        ranks = {
            subset: rank_restricted(A, subset)
            for size in range(A.column_count + 1)
            for subset in itertools.combinations(columns, size)
        }

        for subset, rank in ranks.items():
            assert rank <= min(A.row_count, len(subset))
            if subset:
                sliced = np.array(A.restrict_columns(subset), dtype=float)
                assert rank == int(np.linalg.matrix_rank(sliced))
            for column in set(columns) - set(subset):
                assert ranks[tuple(sorted(subset + (column,)))] >= rank
        assert ranks[tuple(columns)] == A.rank


def test_rank_restricted_on_four_term_progressions():
    A = ap_matrix(4)

    assert rank_restricted(A, []) == 0
    assert rank_restricted(A, [3]) == 1
    assert rank_restricted(A, range(4)) == 2


def test_rank_restricted_rejects_unknown_column():
    with pytest.raises(InputError):
        rank_restricted(ap_matrix(3), [3])


def test_integer_matrix_rejects_ragged_rows_and_booleans():
    with pytest.raises(InputError):
        IntegerMatrix.of([[1, 2], [3]])
    with pytest.raises(InputError):
        IntegerMatrix.of([[True, 1]])
    with pytest.raises(InputError):
        IntegerMatrix.of([])


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_m_of_progression_matrix(k):
    result = m_of_matrix(ap_matrix(k))

    assert result.value == k - 1
    assert result.W == tuple(range(k))
    assert result.Wbar == ()
    assert result.warnings == ()


def test_m_of_schur_matrix():
    result = m_of_matrix(schur_matrix())

    assert result.value == 2
    assert result.rank == 1


def test_m_of_rank_deficient_matrix_warns():
    result = m_of_matrix(IntegerMatrix.of([[1, -2, 1], [2, -4, 2]]))

    assert result.value == 2
    assert result.warnings == (RANK_DEFICIENT_WARNING,)


def test_m_of_matrix_refuses_redundant_and_irregular_systems():
    with pytest.raises(InputError):
        m_of_matrix(IntegerMatrix.of([[1, -1]]))
    with pytest.raises(InputError):
        m_of_matrix(IntegerMatrix.of([[1, 1, -3]]))


def test_irredundancy_witness_is_one_pair():
    assert irredundancy_witness(IntegerMatrix.of([[1, -1, 0]])) == (0, 1)
    assert is_irredundant(schur_matrix())


def test_classify_schur_is_partition_but_not_density_regular():
    classification = classify_matrix(schur_matrix())

    assert classification.irredundant
    assert classification.partition_regular
    assert not classification.density_regular
    assert classification.column_blocks == ((0, 2), (1,))


def test_classify_progressions_is_density_regular():
    classification = classify_matrix(ap_matrix(3))

    assert classification.density_regular
    assert columns_condition(ap_matrix(3)) == ((0, 1, 2),)


def test_classify_redundant_matrix_reports_failing_pair():
    classification = classify_matrix(IntegerMatrix.of([[1, -1]]))

    assert not classification.irredundant
    assert not classification.density_regular
    assert classification.failing_pair == (0, 1)


def test_columns_condition_fails_without_zero_sum_block():
    assert columns_condition(IntegerMatrix.of([[1, 1, -3]])) is None


def test_threshold_exponents_per_family():
    assert threshold_exponent(ConfigSpec.ap(10, 3)) == Fraction(1, 2)
    assert threshold_exponent(ConfigSpec.ap(10, 5)) == Fraction(1, 4)
    assert threshold_exponent(ConfigSpec.schur(10)) == Fraction(1, 2)
    assert threshold_exponent(ConfigSpec.fcopies(6, complete_pattern(3))) == Fraction(1, 2)
    assert threshold_exponent(ConfigSpec.homothetic(6, [0, 1, 3, 7])) == Fraction(1, 3)


def test_threshold_probability_uses_exponent():
    spec = ConfigSpec.ap(100, 3)

    assert spec.threshold_probability() == pytest.approx(0.1)
    assert spec.threshold_probability(400) == pytest.approx(0.05)


def test_matrix_fixtures_load(fixtures_dir):
    assert read_matrix(fixtures_dir / "schur.mat") == schur_matrix()
    assert read_matrix(fixtures_dir / "ap3.mat") == ap_matrix(3)
    assert not is_irredundant(read_matrix(fixtures_dir / "redundant.mat"))


def test_matrix_text_round_trip():
    A = ap_matrix(5)

    assert load_matrix(dump_matrix(A, comments=["five terms"])) == A


@pytest.mark.parametrize(
    "text",
    ["", "rows 2 cols 3\n1 -2 1\n", "rows 1 cols 3\n1 -2\n", "rows 1 cols 2\n1 a\n", "cols 2\n"],
)
def test_malformed_matrix_text(text):
    with pytest.raises(FormatError):
        load_matrix(text)


def test_exponent_schema_reports_one_based_columns():
    payload = MatrixExponentSchema().dump(m_of_matrix(schur_matrix()))

    assert payload == {
        "m": "2",
        "threshold_exponent": "1/2",
        "W": [1, 2, 3],
        "Wbar": [],
        "rank": 1,
        "warnings": [],
    }


def test_classification_schema_one_based_blocks():
    payload = MatrixClassificationSchema().dump(classify_matrix(schur_matrix()))

    assert payload["column_blocks"] == [[1, 3], [2]]
    assert payload["failing_pair"] is None
