from __future__ import annotations

import numpy as np
import pytest

from tests.factories import make_hypergraph, random_hypergraph, single_edge
from transference_lab.errors import FormatError, InputError
from transference_lab.generators import gen_ap
from transference_lab.hypergraphs import (
    UniformHypergraph,
    VertexSubset,
    count_E_U_i,
    count_E_U_i_indexed,
    deg_i_count,
    deg_i_vector,
    degree,
    dump_hypergraph,
    edge_free,
    induced_subhypergraph,
    load_hypergraph,
    load_subset,
    read_hypergraph,
)

pytestmark = pytest.mark.exact


def test_edges_are_canonicalised_and_deduplicated():
    H = UniformHypergraph(3, 4, ((2, 1, 0), (0, 1, 2), (3, 1, 2)))

    assert H.edges == ((0, 1, 2), (1, 2, 3))
    assert H.edge_count == 2
    assert H.degrees == (1, 2, 2, 1)


@pytest.mark.parametrize(
    "edges, vertices",
    [
        (((0, 1),), 3),
        (((0, 0, 1),), 3),
        (((0, 1, 5),), 3),
    ],
)
def test_invalid_edges_are_rejected(edges, vertices):
    with pytest.raises(InputError):
        UniformHypergraph(3, vertices, edges)


def test_uniformity_below_two_is_rejected():
    with pytest.raises(InputError):
        UniformHypergraph(1, 3, ((0,),))


def test_vertex_subset_normalises_members():
    subset = VertexSubset(6, (4, 1, 4, 0))

    assert subset.members == (0, 1, 4)
    assert subset.mask == 0b10011
    assert subset.cardinality == 3
    assert 4 in subset and 2 not in subset
    assert VertexSubset.from_mask(6, subset.mask) == subset
    assert VertexSubset.from_bools(subset.flags) == subset


def test_vertex_subset_rejects_out_of_range_member():
    with pytest.raises(InputError):
        VertexSubset(3, (3,))


def test_induced_subhypergraph_on_ap5_drops_every_progression():
    H = gen_ap(5, 3)
    U = H.subset([1, 2, 4, 5])

    induced = induced_subhypergraph(H, U)

    assert induced.vertex_count == 4
    assert induced.edge_count == 0
    assert induced.labels == (1, 2, 4, 5)


def test_induced_subhypergraph_on_full_set_keeps_edges():
    H = random_hypergraph(3, vertices=9, uniformity=3, edges=15)

    induced = induced_subhypergraph(H, H.full_subset())

    assert induced.edges == H.edges


def test_induced_subhypergraph_relabels_to_dense_indices():
    H = make_hypergraph([(0, 2, 4), (1, 2, 3)], vertices=5)

    induced = induced_subhypergraph(H, VertexSubset(5, (0, 2, 4)))

    assert induced.edges == ((0, 1, 2),)
    assert induced.labels == (0, 2, 4)


def test_single_edge_not_contained_in_pair():
    H = single_edge()

    assert induced_subhypergraph(H, VertexSubset(3, (0, 1))).edge_count == 0


def test_deg_i_count_single_edge_cases():
    H = single_edge()

    assert deg_i_count(H, 0, VertexSubset(3, (1,)), 1) == 1
    assert deg_i_count(H, 0, VertexSubset(3, (0,)), 1) == 0
    assert deg_i_count(H, 0, VertexSubset(3, (1,)), 2) == 0


def test_deg_i_count_on_ap5_counts_all_progressions_through_three():
    H = gen_ap(5, 3)

    assert deg_i_count(H, H.index_of(3), H.full_subset(), 2) == 4
    assert degree(H, H.index_of(3)) == 4


def test_deg_i_count_rejects_level_out_of_range():
    H = single_edge()

    with pytest.raises(InputError):
        deg_i_count(H, 0, H.full_subset(), 3)


def test_deg_i_vector_matches_pointwise_counts():
    H = random_hypergraph(5, vertices=10, uniformity=3, edges=30)
    U = VertexSubset(10, (0, 2, 3, 5, 7, 8))

    for i in (1, 2):
        vector = deg_i_vector(H, U, i)
        expected = [deg_i_count(H, v, U, i) for v in range(10)]
        assert vector.tolist() == expected


def test_count_E_U_i_examples_on_ap5():
    H = gen_ap(5, 3)
    U = H.full_subset()
    W = H.subset([1, 3])

    assert count_E_U_i(H, U, W, 2) == 2
    assert count_E_U_i(H, U, VertexSubset.empty(5), 0) == 4
    assert count_E_U_i(H, U, U, 3) == 4


def test_count_E_U_i_requires_w_inside_u():
    H = gen_ap(5, 3)

    with pytest.raises(InputError):
        count_E_U_i(H, H.subset([1, 2]), H.subset([3]), 1)


@pytest.mark.parametrize("seed", range(5))
def test_indexed_count_agrees_with_scan(seed):
    H = random_hypergraph(seed, vertices=12, uniformity=4, edges=40)
    rng = np.random.default_rng(seed)
    U_flags = rng.random(12) < 0.7
    W_flags = U_flags & (rng.random(12) < 0.6)
    U, W = VertexSubset.from_bools(U_flags), VertexSubset.from_bools(W_flags)

    for i in range(0, 5):
        assert count_E_U_i_indexed(H, U, W, i) == count_E_U_i(H, U, W, i)


def test_edge_free():
    H = gen_ap(5, 3)

    assert edge_free(H, H.subset([1, 2, 4, 5]))
    assert not edge_free(H, H.full_subset())


def test_hypergraph_text_round_trip_keeps_tuple_labels():
    H = UniformHypergraph(2, 3, ((0, 1), (1, 2)), ((1, 2), (1, 3), (2, 3)))

    text = dump_hypergraph(H, comments=["generated for a test"])
    loaded = load_hypergraph(text)

    assert text.splitlines()[0] == "k 2 n 3 m 2"
    assert "# generated for a test" in text
    assert loaded == H


def test_read_hypergraph_fixture(fixtures_dir):
    H = read_hypergraph(fixtures_dir / "ap5.hg")

    assert H.edges == gen_ap(5, 3).edges
    assert H.labels is None


@pytest.mark.parametrize(
    "text",
    [
        "",
        "k 3 n 5\n0 1 2\n",
        "k 3 n 5 m 2\n0 1 2\n",
        "k 3 n 5 m 1\n0 1\n",
        "k 3 n 5 m 1\n0 x 2\n",
        "k 3 n 5 m 2\n0 1 2\n2 1 0\n",
    ],
)
def test_malformed_hypergraph_text_raises_format_error(text):
    with pytest.raises(FormatError):
        load_hypergraph(text)


def test_load_subset_skips_comments():
    subset = load_subset("# chosen\n0 1\n\n3 4\n", 5)

    assert subset.members == (0, 1, 3, 4)


def test_load_subset_rejects_index_outside_universe():
    with pytest.raises(InputError):
        load_subset("0 7\n", 5)
