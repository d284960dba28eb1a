"""Exact moments of surviving edges and their sampled check."""

from __future__ import annotations

import pytest

from tests.factories import single_edge
from transference_lab.errors import InputError
from transference_lab.generators import gen_ap
from transference_lab.harness import (
    chebyshev_upper,
    expected_counts,
    pair_intersection_counts,
    surviving_edge_moments,
    validate_first_moments,
)

pytestmark = pytest.mark.exact


def test_expected_counts():
    assert expected_counts(gen_ap(10, 3), 0.5) == (5.0, 2.5)
    assert expected_counts(gen_ap(10, 3), 0.0) == (0.0, 0.0)


def test_pair_counts_partition_all_ordered_pairs():
    H = gen_ap(9, 3)

    counts = pair_intersection_counts(H)

    assert sum(counts) == H.edge_count**2
    assert counts[3] == H.edge_count


def test_single_edge_variance():
    moments = surviving_edge_moments(single_edge(), 0.5)

    assert moments.pair_counts == (0, 0, 0, 1)
    assert moments.mean == pytest.approx(0.125)
    assert moments.variance == pytest.approx(0.125 - 0.125**2)


def test_variance_vanishes_at_extremes():
    H = gen_ap(9, 3)

    assert surviving_edge_moments(H, 1.0).variance == 0.0
    assert surviving_edge_moments(H, 0.0).variance == 0.0


def test_chebyshev_upper_bound():
    H = gen_ap(12, 3)
    moments = surviving_edge_moments(H, 0.5)

    bound = chebyshev_upper(H, 0.5, 1.0)

    assert bound == pytest.approx(min(1.0, moments.variance / moments.mean**2))
    assert chebyshev_upper(H, 0.0, 1.0) == 0.0
    with pytest.raises(InputError):
        chebyshev_upper(H, 0.5, 0.0)


def test_validation_at_q_one_is_exact():
    validation = validate_first_moments(gen_ap(9, 3), 1.0, 10, seed=1)

    assert validation.vertices.empirical_mean == 9
    assert validation.edges.empirical_mean == 16
    assert validation.vertices.z_score == 0.0
    assert validation.within_four_sd


@pytest.mark.montecarlo
def test_sampled_means_agree_with_expectations():
    validation = validate_first_moments(gen_ap(20, 3), 0.5, 2000, seed=12)

    assert validation.within_four_sd
    assert validation.edges.expected == pytest.approx(90 / 8)


@pytest.mark.montecarlo
def test_validation_is_independent_of_worker_count():
    H = gen_ap(12, 3)

    assert validate_first_moments(H, 0.4, 2500, seed=2, jobs=1) == validate_first_moments(
        H, 0.4, 2500, seed=2, jobs=2
    )
