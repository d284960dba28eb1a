from __future__ import annotations

import math

import numpy as np
import pytest

from tests.factories import make_hypergraph, random_hypergraph, single_edge
from transference_lab.boundedness import (
    OverlapProfile,
    QGrid,
    binomial_tail,
    bound_ratio,
    certify_boundedness,
    joint_tail_prob,
    mu_exact,
    mu_montecarlo,
    prune_bound,
    prune_check,
    sampled_degree_square_sum,
)
from transference_lab.boundedness.schemas import BoundednessReportSchema, PruneResultSchema
from transference_lab.errors import InputError
from transference_lab.generators import ConfigSpec, gen_ap, gen_schur


class TestTails:
    pytestmark = pytest.mark.exact

    @staticmethod
    def _enumerated(a, b, t, i, q):
        """Sum of q-weights over all 2^(a+b+t) samples; shared vertices come first."""

        size = a + b + t
        bits = (np.arange(2**size)[:, None] >> np.arange(size)) & 1
        in_a = bits[:, : t + a].sum(axis=1)
        in_b = bits[:, :t].sum(axis=1) + bits[:, t + a :].sum(axis=1)
        hits = bits.sum(axis=1)
        weights = q**hits * (1 - q) ** (size - hits)
        return float(weights[(in_a >= i) & (in_b >= i)].sum())

    @pytest.mark.parametrize("q", [0.2, 0.5, 0.85])
    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_joint_tail_matches_enumeration(self, i, q):
        for size in range(13):
            for t in range(size + 1):
                for a in range(size - t + 1):
                    b = size - t - a
                    expected = self._enumerated(a, b, t, i, q)

                    assert joint_tail_prob(a, b, t, i, q) == pytest.approx(expected, abs=1e-12)

    def test_binomial_tail_boundaries(self):
        assert binomial_tail(5, 0, 0.3) == 1.0
        assert binomial_tail(5, 6, 0.3) == 0.0
        assert binomial_tail(5, 1, 0.0) == 0.0
        assert binomial_tail(5, 5, 1.0) == 1.0
        assert binomial_tail(2, 1, 0.5) == pytest.approx(0.75)

    def test_joint_tail_without_shared_vertices(self):
        assert joint_tail_prob(0, 0, 2, 1, 0.5) == pytest.approx(0.75)
        assert joint_tail_prob(2, 2, 0, 1, 0.5) == pytest.approx(0.75**2)

    def test_joint_tail_extremes(self):
        assert joint_tail_prob(1, 1, 1, 1, 0.0) == 0.0
        assert joint_tail_prob(1, 1, 1, 2, 1.0) == 1.0
        assert joint_tail_prob(1, 0, 0, 1, 1.0) == 0.0

    def test_joint_tail_rejects_bad_arguments(self):
        with pytest.raises(InputError):
            joint_tail_prob(-1, 0, 0, 1, 0.5)
        with pytest.raises(InputError):
            joint_tail_prob(0, 0, 1, 0, 0.5)
        with pytest.raises(InputError):
            joint_tail_prob(0, 0, 1, 1, 1.5)


class TestMu:
    pytestmark = pytest.mark.exact

    def test_overlap_profile_of_single_edge(self):
        profile = OverlapProfile.of(single_edge())

        assert profile.counts == (0, 0, 3)
        assert profile.total == 3

    def test_overlap_profile_total_is_degree_square_sum(self):
        H = random_hypergraph(2, vertices=10, uniformity=4, edges=25)

        assert OverlapProfile.of(H).total == sum(d * d for d in H.degrees)

    def test_mu_exact_single_edge(self):
        assert mu_exact(single_edge(), 1, 0.5) == pytest.approx(2.25)

    @pytest.mark.parametrize("i", [1, 2])
    def test_mu_exact_endpoints(self, i):
        H = gen_ap(10, 3)

        assert mu_exact(H, i, 1.0) == pytest.approx(sum(d * d for d in H.degrees))
        assert mu_exact(H, i, 0.0) == 0.0

    def test_mu_exact_rejects_level_out_of_range(self):
        with pytest.raises(InputError):
            mu_exact(single_edge(), 3, 0.5)
        with pytest.raises(InputError):
            mu_exact(single_edge(), 0, 0.5)

    def test_mu_is_monotone_in_q(self):
        H = gen_ap(15, 4)
        values = [mu_exact(H, 2, q) for q in (0.1, 0.3, 0.6, 0.9)]

        assert values == sorted(values)

    def test_mu_is_non_increasing_in_level(self):
        H = gen_ap(12, 4)

        for q in (0.25, 0.5, 0.8):
            values = [mu_exact(H, i, q) for i in (1, 2, 3)]

            assert values[0] >= values[1] >= values[2]
            assert values[2] > 0

    def test_bound_ratio(self):
        assert bound_ratio(4.0, 0.5, 1, 10, 2) == pytest.approx(40.0)


@pytest.mark.montecarlo
class TestMuMonteCarlo:
    def test_q_one_has_no_spread(self):
        H = gen_ap(9, 3)

        estimate = mu_montecarlo(H, 1, 1.0, 20, seed=3)

        assert estimate.estimate == sum(d * d for d in H.degrees)
        assert estimate.standard_error == 0.0

    def test_estimate_agrees_with_exact_value(self):
        H = gen_ap(12, 3)
        exact = mu_exact(H, 1, 0.4)

        estimate = mu_montecarlo(H, 1, 0.4, 4000, seed=17)

        assert abs(estimate.estimate - exact) <= 5 * estimate.standard_error

    def test_seeded_runs_repeat(self):
        H = gen_ap(10, 3)

        assert mu_montecarlo(H, 2, 0.5, 50, seed=1) == mu_montecarlo(H, 2, 0.5, 50, seed=1)

    def test_worker_count_does_not_change_the_estimate(self):
        H = gen_ap(10, 3)

        serial = mu_montecarlo(H, 1, 0.5, 1200, seed=8, jobs=1)
        fanned = mu_montecarlo(H, 1, 0.5, 1200, seed=8, jobs=2)

        assert serial == fanned


class TestCertify:
    pytestmark = pytest.mark.exact

    def test_grid_starts_at_threshold_and_ends_at_upper(self):
        values = QGrid(points=4, upper=1.0).values(0.1)

        assert len(values) == 4
        assert values[0] == pytest.approx(0.1)
        assert values[-1] == pytest.approx(1.0)

    def test_single_point_grid_is_threshold(self):
        assert QGrid(points=1).values(0.25) == (0.25,)

    def test_explicit_grid_below_threshold_rejected(self):
        with pytest.raises(InputError):
            QGrid(explicit=(0.01, 0.5)).values(0.1)
        with pytest.raises(InputError):
            QGrid(explicit=()).values(0.1)

    def test_certify_rows_and_k_min(self):
        report = certify_boundedness(ConfigSpec.ap(9, 3), [9, 16], [1, 2], QGrid(points=3))

        assert len(report.rows) == 2 * 2 * 3
        assert report.sizes == {9: (9, 16), 16: (16, 56)}
        assert report.recomputed_k_min() == pytest.approx(report.k_min)
        assert report.overall_k_min == max(row.bound_ratio for row in report.rows)
        assert min(row.q for row in report.rows if row.n == 9) == pytest.approx(1 / 3)

    def test_certify_matches_mu_exact(self):
        report = certify_boundedness(ConfigSpec.schur(10), [10], 1, QGrid(explicit=(0.5, 1.0)))
        H = gen_schur(10)

        for row in report.rows:
            assert row.mu == pytest.approx(mu_exact(H, 1, row.q))

    def test_certify_refuses_empty_family(self):
        with pytest.raises(InputError, match="empty configuration family"):
            certify_boundedness(ConfigSpec.schur(2), [2], 1, QGrid(points=2))

    def test_report_schema_lists_k_min_per_size_and_level(self):
        report = certify_boundedness(ConfigSpec.ap(9, 3), [9], [1], QGrid(points=2))

        payload = BoundednessReportSchema().dump(report)

        assert len(payload["rows"]) == 2
        assert payload["k_min"] == [{"n": 9, "i": 1, "k_min": report.k_min[(9, 1)]}]


class TestPrune:
    pytestmark = pytest.mark.montecarlo

    def test_bound_formula(self):
        H = gen_ap(9, 3)

        assert prune_bound(H, 0.5, 1, 2.0) == pytest.approx(64 * 9 * 2.0 * 0.25 * 16**2 / 9)

    def test_generous_k_is_certified(self):
        H = gen_ap(12, 3)

        result = prune_check(H, 0.6, 1, 0.5, 100.0, seed=4)

        assert result.ok
        assert result.achieved_sum <= result.initial_sum
        assert result.deleted.issubset(result.sampled)
        assert result.deleted.cardinality <= result.deletion_budget

    def test_zero_budget_cannot_delete(self):
        H = gen_ap(9, 3)

        result = prune_check(H, 1.0, 1, 0.1, 0.0, seed=1)

        assert result.deletion_budget == 0
        assert result.deleted.cardinality == 0
        assert result.achieved_sum == result.initial_sum == sum(d * d for d in H.degrees)
        assert not result.ok

    def test_greedy_deletion_tracks_the_true_sum(self):
        H = gen_ap(10, 3)

        result = prune_check(H, 1.0, 2, 1.0, 0.0, seed=2)
        remaining = result.sampled.mask & ~result.deleted.mask
        flags = [bool(remaining >> v & 1) for v in range(H.vertex_count)]

        assert sampled_degree_square_sum(H, np.array(flags), 2) == result.achieved_sum
        assert result.achieved_sum < result.initial_sum

    def test_empty_sample_is_trivially_fine(self):
        result = prune_check(make_hypergraph([(0, 1, 2)]), 0.0, 1, 1.0, 0.0, seed=0)

        assert result.ok
        assert result.sampled.cardinality == 0
        assert math.isclose(result.bound, 0.0)

    def test_same_seed_same_result(self):
        H = gen_ap(11, 3)

        first = prune_check(H, 0.5, 1, 0.5, 1.0, seed=9, trial=3)
        second = prune_check(H, 0.5, 1, 0.5, 1.0, seed=9, trial=3)

        assert first == second

    def test_argument_checks(self):
        H = gen_ap(9, 3)

        with pytest.raises(InputError):
            prune_check(H, 0.5, 3, 0.5, 1.0, seed=0)
        with pytest.raises(InputError):
            prune_check(H, 0.5, 1, 0.0, 1.0, seed=0)
        with pytest.raises(InputError):
            prune_check(H, 0.5, 1, 0.5, -1.0, seed=0)

    def test_schema_summarises_sets(self):
        result = prune_check(gen_ap(9, 3), 1.0, 1, 0.1, 0.0, seed=1)

        payload = PruneResultSchema().dump(result)

        assert payload["deleted"] == []
        assert payload["sampled_count"] == 9
        assert payload["ok"] is False
