"""Uniform hypergraph representation and counting primitives."""

from .model import Edge, Label, UniformHypergraph, VertexSubset
from .operations import (
    contained_edge_flags,
    count_E_U_i,
    count_E_U_i_indexed,
    deg_i_count,
    deg_i_vector,
    degree,
    edge_free,
    induced_subhypergraph,
)
from .textio import (
    dump_hypergraph,
    load_hypergraph,
    load_subset,
    read_hypergraph,
    read_subset,
    write_hypergraph,
)

__all__ = [
    "Edge",
    "Label",
    "UniformHypergraph",
    "VertexSubset",
    "contained_edge_flags",
    "count_E_U_i",
    "count_E_U_i_indexed",
    "deg_i_count",
    "deg_i_vector",
    "degree",
    "edge_free",
    "induced_subhypergraph",
    "dump_hypergraph",
    "load_hypergraph",
    "load_subset",
    "read_hypergraph",
    "read_subset",
    "write_hypergraph",
]
