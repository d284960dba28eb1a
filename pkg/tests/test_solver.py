from __future__ import annotations

from fractions import Fraction

import pytest

from tests.factories import brute_force_arrow, make_hypergraph, single_edge, small_family_instances
from transference_lab.errors import InputError
from transference_lab.generators import (
    complete_pattern,
    gen_ap,
    gen_fcopies,
    gen_schur,
    path_pattern,
)
from transference_lab.hypergraphs import VertexSubset, edge_free, induced_subhypergraph
from transference_lab.solver import (
    Verdict,
    alpha_bruteforce,
    alpha_exact,
    arrow_decide,
    arrow_target,
    copy_hypergraph,
    deletion_free_subset,
    greedy_independent_set,
    host_subset,
    turan_decide,
    turan_target,
    turan_ex,
)
from transference_lab.solver.schemas import DecisionResultSchema, SolveResultSchema

pytestmark = pytest.mark.exact


@pytest.mark.parametrize(
    "H, expected",
    [
        (gen_ap(9, 3), 5),
        (gen_schur(5), 3),
        (gen_fcopies(4, 2, complete_pattern(3)), 4),
        (single_edge(), 2),
        (make_hypergraph([], vertices=7), 7),
    ],
)
def test_alpha_exact_known_values(H, expected):
    result = alpha_exact(H)

    assert result.exact
    assert result.alpha == result.lower == result.upper == expected
    assert result.witness.cardinality == expected
    assert edge_free(H, result.witness)


def test_alpha_exact_matches_bruteforce_on_small_families():
    for H in small_family_instances(30):
        result = alpha_exact(H)

        assert result.exact
        assert result.alpha == alpha_bruteforce(H)
        assert edge_free(H, result.witness)


def test_truncated_search_brackets_alpha():
    H = gen_ap(30, 3)

    result = alpha_exact(H, budget=1)

    assert not result.exact
    assert result.lower == result.alpha <= result.upper
    assert edge_free(H, result.witness)
    assert result.witness.cardinality == result.alpha


def test_alpha_rejects_non_positive_budget():
    with pytest.raises(InputError):
        alpha_exact(single_edge(), budget=0)


def test_bruteforce_has_a_vertex_limit():
    with pytest.raises(InputError):
        alpha_bruteforce(gen_ap(30, 3))


def test_greedy_and_deletion_subsets_are_edge_free():
    H = gen_ap(20, 3)
    X = VertexSubset(20, tuple(range(2, 18)))

    greedy = greedy_independent_set(H)
    deleted = deletion_free_subset(H, X)

    assert edge_free(H, greedy)
    assert edge_free(H, deleted)
    assert deleted.issubset(X)
    assert deleted.cardinality >= X.cardinality - induced_subhypergraph(H, X).edge_count


@pytest.mark.parametrize("n, expected", [(3, 2), (4, 4), (5, 6), (6, 9)])
def test_turan_number_of_triangle(n, expected):
    result = turan_ex(n, 2, complete_pattern(3))

    assert result.exact
    assert result.alpha == expected


def test_turan_ex_on_partial_host():
    K3 = complete_pattern(3)
    host = host_subset(4, 2, [(1, 2), (2, 3), (1, 3), (3, 4)])

    assert turan_ex(4, 2, K3, host).alpha == 3
    assert turan_ex(4, 2, K3, VertexSubset(6, ())).alpha == 0


def test_turan_ex_witness_lives_in_host():
    host = host_subset(5, 2, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)])

    result = turan_ex(5, 2, complete_pattern(3), host)

    assert result.witness.issubset(host)
    assert result.alpha == 5


def test_copy_hypergraph_below_pattern_size_is_edgeless():
    H = copy_hypergraph(2, 2, complete_pattern(3))

    assert H.vertex_count == 1
    assert H.edge_count == 0
    assert turan_ex(2, 2, complete_pattern(3)).alpha == 1


def test_host_subset_rejects_bad_edges():
    with pytest.raises(InputError):
        host_subset(4, 2, [(1, 5)])
    with pytest.raises(InputError):
        host_subset(4, 2, [(2, 2)])
    with pytest.raises(InputError):
        turan_ex(4, 2, path_pattern(3), VertexSubset(5, ()))


def test_targets():
    assert arrow_target(Fraction(1, 2), 9) == 5
    assert arrow_target(Fraction(3, 5), 9) == 6
    assert turan_target(Fraction(1, 2), Fraction(1, 10), 10) == 7
    assert turan_target(Fraction(0), Fraction(1, 2), 4) == 3


def test_arrow_on_ap9():
    H = gen_ap(9, 3)

    fails = arrow_decide(H, H.full_subset(), "1/2")
    holds = arrow_decide(H, H.full_subset(), Fraction(3, 5))

    assert fails.verdict is Verdict.FAILS
    assert fails.target == 5
    assert fails.lower >= 5
    assert holds.verdict is Verdict.HOLDS
    assert holds.target == 6
    assert holds.upper < 6


def test_arrow_on_empty_subset_is_vacuous():
    decision = arrow_decide(gen_ap(9, 3), VertexSubset(9, ()), Fraction(1, 2))

    assert decision.holds
    assert decision.vacuous
    assert decision.size == 0


@pytest.mark.parametrize("epsilon", [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)])
def test_arrow_matches_brute_force(epsilon):
    for H in small_family_instances(15, seed=3):
        if H.vertex_count > 12:
            continue
        X = H.full_subset()

        decision = arrow_decide(H, X, epsilon)

        assert decision.decided
        assert decision.holds == brute_force_arrow(H, X, epsilon)


def test_arrow_rejects_epsilon_outside_unit_interval():
    H = gen_ap(9, 3)

    with pytest.raises(InputError):
        arrow_decide(H, H.full_subset(), 0)
    with pytest.raises(InputError):
        arrow_decide(H, H.full_subset(), Fraction(3, 2))


def test_tiny_budget_never_claims_failure_it_did_not_find():
    H = gen_ap(30, 3)
    lower = alpha_exact(H, budget=1).lower

    decision = arrow_decide(H, H.full_subset(), Fraction(lower + 1, 30), budget=1)

    assert decision.verdict is not Verdict.FAILS
    assert (decision.verdict is Verdict.UNDECIDED) == (decision.upper >= decision.target)


def test_turan_decide_on_complete_graphs():
    K3 = complete_pattern(3)
    H5 = copy_hypergraph(5, 2, K3)
    H6 = copy_hypergraph(6, 2, K3)

    holds = turan_decide(H5, H5.full_subset(), Fraction(1, 2), Fraction(1, 10))
    fails = turan_decide(H6, H6.full_subset(), Fraction(1, 2), Fraction(1, 30))

    assert holds.verdict is Verdict.HOLDS
    assert holds.target == 7
    assert fails.verdict is Verdict.FAILS
    assert fails.target == 9


def test_turan_decide_rejects_density_of_one():
    H = copy_hypergraph(4, 2, complete_pattern(3))

    with pytest.raises(InputError):
        turan_decide(H, H.full_subset(), 1, Fraction(1, 10))


def test_schemas():
    H = gen_ap(9, 3)

    solve = SolveResultSchema().dump(alpha_exact(H))
    decision = DecisionResultSchema().dump(arrow_decide(H, H.full_subset(), "3/5"))

    assert solve["alpha"] == 5 and solve["exact"] is True
    assert decision["verdict"] == "holds"
    assert decision["vacuous"] is False
    assert decision["size"] == 9
