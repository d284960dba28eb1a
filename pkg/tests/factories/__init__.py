"""Helper factories for building hypergraphs, manifests and oracle answers in tests."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any

import numpy as np

from transference_lab.generators import (
    ConfigSpec,
    complete_pattern,
    gen_ap,
    gen_fcopies,
    gen_homothetic,
    gen_linear,
    gen_schur,
    path_pattern,
)
from transference_lab.harness import ExperimentManifest, QSchedule
from transference_lab.hypergraphs import UniformHypergraph, VertexSubset, induced_subhypergraph
from transference_lab.matrices import ap_matrix


def make_hypergraph(
    edges: Iterable[Sequence[int]], *, vertices: int | None = None, uniformity: int | None = None
) -> UniformHypergraph:
    """Hypergraph from 0-based edges; vertex count defaults to one past the largest index."""

    edge_list = [tuple(edge) for edge in edges]
    k = uniformity or (len(edge_list[0]) if edge_list else 3)
    n = vertices if vertices is not None else 1 + max((max(e) for e in edge_list), default=-1)
    return UniformHypergraph(k, n, tuple(edge_list))


def single_edge(k: int = 3) -> UniformHypergraph:
    return UniformHypergraph(k, k, (tuple(range(k)),))


def random_hypergraph(
    seed: int, *, vertices: int, uniformity: int, edges: int
) -> UniformHypergraph:
    rng = np.random.default_rng(seed)
    pool = list(itertools.combinations(range(vertices), uniformity))
    chosen = rng.choice(len(pool), size=min(edges, len(pool)), replace=False)
    return UniformHypergraph(uniformity, vertices, tuple(pool[int(i)] for i in chosen))


def small_family_instances(count: int, seed: int = 7) -> list[UniformHypergraph]:
    """A rotation over all five generators with at most 20 vertices, plus induced pieces."""

    rng = np.random.default_rng(seed)
    makers = [
        lambda: gen_ap(int(rng.integers(3, 21)), int(rng.integers(3, 5))),
        lambda: gen_homothetic(int(rng.integers(2, 5)), 2, [(0, 0), (1, 0), (0, 1)]),
        lambda: gen_linear(ap_matrix(3), int(rng.integers(3, 21))),
        lambda: gen_schur(int(rng.integers(2, 21))),
        lambda: gen_fcopies(
            int(rng.integers(3, 6)), 2, (complete_pattern(3), path_pattern(3))[int(rng.integers(2))]
        ),
    ]
    instances = []
    for index in range(count):
        H = makers[index % len(makers)]()
        if H.vertex_count > 20:
            flags = rng.random(H.vertex_count) < 20 / H.vertex_count
            flags[20:] = False
            H = induced_subhypergraph(H, VertexSubset.from_bools(flags))
        instances.append(H)
    return instances


def brute_force_arrow(H: UniformHypergraph, X: VertexSubset, epsilon: Fraction) -> bool:
    """Literal check: every Y in X with |Y| >= eps |X| contains an edge of H."""

    members = X.members
    threshold = math.ceil(epsilon * len(members))
    masks = H.edge_masks
    for size in range(max(threshold, 0), len(members) + 1):
        for Y in itertools.combinations(members, size):
            y_mask = sum(1 << v for v in Y)
            if not any(mask & y_mask == mask for mask in masks):
                return False
    return True


def make_manifest(
    *,
    spec: ConfigSpec | None = None,
    epsilon: Fraction | str = Fraction(1, 2),
    q_values: Sequence[float] = (1.0,),
    c_grid: Sequence[float] | None = None,
    trials: int = 5,
    seed: int = 11,
    budget: int = 100_000,
    turan_density: Any = None,
) -> ExperimentManifest:
    schedule = QSchedule.c_grid(c_grid) if c_grid is not None else QSchedule.explicit(q_values)
    return ExperimentManifest(
        spec=spec or ConfigSpec.ap(9, 3),
        epsilon=Fraction(epsilon),
        schedule=schedule,
        trials=trials,
        seed=seed,
        budget=budget,
        turan_density=turan_density,
    )


def make_manifest_document(**overrides: Any) -> dict[str, Any]:
    document: dict[str, Any] = {
        "schema_version": 1,
        "family": {"family": "ap", "n": 9, "k": 3},
        "epsilon": "1/2",
        "schedule": {"kind": "explicit", "values": [0.5, 1.0]},
        "trials": 4,
        "seed": 3,
    }
    document.update(overrides)
    return document
