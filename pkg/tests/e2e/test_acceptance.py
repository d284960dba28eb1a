"""Desk-scale acceptance runs; deselected by default, run with ``pytest -m slow``."""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from tests.factories import brute_force_arrow, make_manifest, small_family_instances
from transference_lab.boundedness import QGrid, certify_boundedness, mu_exact, mu_montecarlo
from transference_lab.generators import ConfigSpec, gen_ap
from transference_lab.harness import sweep, validate_first_moments
from transference_lab.hypergraphs import VertexSubset
from transference_lab.solver import alpha_bruteforce, alpha_exact, arrow_decide

pytestmark = pytest.mark.slow


def test_alpha_matches_enumeration_on_randomized_instances():
    for H in small_family_instances(100, seed=2024):
        result = alpha_exact(H)

        assert result.exact
        assert result.alpha == alpha_bruteforce(H)


def test_arrow_matches_literal_search_on_randomized_subsets():
    rng = np.random.default_rng(99)
    epsilons = (Fraction(1, 3), Fraction(1, 2), Fraction(3, 5))
    for index, H in enumerate(small_family_instances(50, seed=77)):
        flags = rng.random(H.vertex_count) < 0.8
        flags[16:] = False
        X = VertexSubset.from_bools(flags)
        epsilon = epsilons[index % len(epsilons)]

        decision = arrow_decide(H, X, epsilon)

        assert decision.decided
        assert decision.holds == brute_force_arrow(H, X, epsilon)


def test_mu_sampling_agrees_with_exact_values():
    for index, H in enumerate(small_family_instances(20, seed=5)):
        if H.edge_count == 0:
            continue
        q = 0.3 + 0.05 * (index % 5)

        estimate = mu_montecarlo(H, 1, q, 100_000, seed=index)
        exact = mu_exact(H, 1, q)

        assert abs(estimate.estimate - exact) <= 4 * estimate.standard_error + 1e-9


def test_k_min_is_stable_across_n():
    report = certify_boundedness(ConfigSpec.ap(50, 3), (50, 100, 200), 1, QGrid(points=20))

    values = [report.k_min[(n, 1)] for n in (50, 100, 200)]
    assert all(math.isfinite(value) for value in values)
    assert max(values) / min(values) <= 4


def test_success_probability_rises_across_the_threshold():
    manifest = make_manifest(
        spec=ConfigSpec.ap(400, 3),
        epsilon=Fraction(1, 2),
        c_grid=(0.25, 8.0),
        trials=200,
        seed=1,
        budget=2_000_000,
    )

    curve = sweep(manifest)

    low, high = curve.rows
    assert high.estimate - low.estimate >= 0.5
    assert all(row.undecided <= 0.1 * row.trials for row in curve.rows)


def test_crossing_scales_like_inverse_square_root():
    scaled = []
    for n in (100, 225, 400):
        manifest = make_manifest(
            spec=ConfigSpec.ap(n, 3),
            epsilon=Fraction(1, 2),
            c_grid=(0.25, 0.5, 1.0, 2.0, 4.0, 8.0),
            trials=200,
            seed=n,
            budget=2_000_000,
        )
        crossing = sweep(manifest).crossing

        assert crossing is not None and crossing.found
        scaled.append(crossing.q_star * math.sqrt(n))

    assert max(scaled) / min(scaled) <= 4


@pytest.mark.parametrize("q", [0.01, 0.05])
def test_first_moments_match_on_large_progression_family(q):
    validation = validate_first_moments(gen_ap(1000, 3), q, 10_000, seed=8, jobs=2)

    assert validation.within_four_sd


def test_cli_sweep_is_byte_identical_across_jobs(run_cli, tmp_path, load_json_fixture):
    document = load_json_fixture("manifest_ap9.json")
    document["family"] = {"family": "ap", "n": 100, "k": 3}
    document["schedule"] = {"kind": "c_grid", "values": [0.5, 1.0, 2.0, 4.0]}
    document["trials"] = 40
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json.dumps(document), encoding="utf-8")

    outputs = {}
    for jobs in ("1", "3"):
        report = tmp_path / f"report-{jobs}.json"
        code, curve, _ = run_cli(
            "sweep", "--manifest", str(manifest), "--jobs", jobs, "--report", str(report)
        )
        assert code in (0, 1)
        outputs[jobs] = (curve, report.read_bytes())

    assert outputs["1"] == outputs["3"]
