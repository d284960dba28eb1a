"""Immutable k-uniform hypergraphs over dense vertex indices."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from transference_lab.errors import InputError

Label = int | tuple[int, ...] | str
Edge = tuple[int, ...]


def _normalize_label(label: Any) -> Label:
    if isinstance(label, bool):
        raise InputError("Vertex labels cannot be booleans.", payload={"field": "labels"})
    if isinstance(label, int | str):
        return label
    if isinstance(label, np.integer):
        return int(label)
    if isinstance(label, Iterable):
        return tuple(int(part) for part in label)
    raise InputError(f"Unsupported vertex label {label!r}.", payload={"field": "labels"})


@dataclass(frozen=True)
class VertexSubset:
    """A set of vertex indices of a hypergraph with ``universe`` vertices."""

    universe: int
    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise InputError("Subset universe cannot be negative.", payload={"field": "universe"})
        normalized = tuple(sorted(set(int(index) for index in self.members)))
        if normalized and (normalized[0] < 0 or normalized[-1] >= self.universe):
            bad = normalized[0] if normalized[0] < 0 else normalized[-1]
            raise InputError(
                f"Vertex index {bad} is outside 0..{self.universe - 1}.",
                payload={"field": "members", "value": bad},
            )
        object.__setattr__(self, "members", normalized)

    @classmethod
    def full(cls, universe: int) -> VertexSubset:
        return cls(universe, tuple(range(universe)))

    @classmethod
    def empty(cls, universe: int) -> VertexSubset:
        return cls(universe, ())

    @classmethod
    def from_mask(cls, universe: int, mask: int) -> VertexSubset:
        members = []
        index = 0
        while mask:
            if mask & 1:
                members.append(index)
            mask >>= 1
            index += 1
        return cls(universe, tuple(members))

    @classmethod
    def from_bools(cls, flags: Sequence[bool] | np.ndarray) -> VertexSubset:
        array = np.asarray(flags, dtype=bool)
        return cls(int(array.size), tuple(int(i) for i in np.flatnonzero(array)))

    @cached_property
    def mask(self) -> int:
        value = 0
        for index in self.members:
            value |= 1 << index
        return value

    @cached_property
    def flags(self) -> np.ndarray:
        array = np.zeros(self.universe, dtype=bool)
        if self.members:
            array[list(self.members)] = True
        array.setflags(write=False)
        return array

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, index: object) -> bool:
        if not isinstance(index, int) or not 0 <= index < self.universe:
            return False
        return bool(self.mask >> index & 1)

    def issubset(self, other: VertexSubset) -> bool:
        return self.mask & ~other.mask == 0

    def without(self, index: int) -> VertexSubset:
        return VertexSubset(self.universe, tuple(v for v in self.members if v != index))


@dataclass(frozen=True)
class UniformHypergraph:
    """A k-uniform hypergraph on vertices ``0..vertex_count-1``.

    Edges are sorted index tuples, deduplicated and kept in lexicographic
    order; ``labels`` optionally maps each index to a domain label.
    """

    uniformity: int
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[Label, ...] | None = None

    def __post_init__(self) -> None:
        if self.uniformity < 2:
            raise InputError(
                f"Uniformity must be at least 2, got {self.uniformity}.",
                payload={"field": "uniformity"},
            )
        if self.vertex_count < 0:
            raise InputError("vertex_count cannot be negative.", payload={"field": "vertex_count"})

        canonical: set[Edge] = set()
        for raw in self.edges:
            edge = tuple(sorted(int(vertex) for vertex in raw))
            if len(edge) != self.uniformity or len(set(edge)) != self.uniformity:
                raise InputError(
                    f"Edge {tuple(raw)} does not have {self.uniformity} distinct vertices.",
                    payload={"field": "edges"},
                )
            if edge[0] < 0 or edge[-1] >= self.vertex_count:
                raise InputError(
                    f"Edge {edge} references a vertex outside 0..{self.vertex_count - 1}.",
                    payload={"field": "edges"},
                )
            canonical.add(edge)
        object.__setattr__(self, "edges", tuple(sorted(canonical)))

        if self.labels is not None:
            labels = tuple(_normalize_label(label) for label in self.labels)
            if len(labels) != self.vertex_count:
                raise InputError(
                    f"Expected {self.vertex_count} labels, got {len(labels)}.",
                    payload={"field": "labels"},
                )
            if len(set(labels)) != len(labels):
                raise InputError("Vertex labels must be distinct.", payload={"field": "labels"})
            object.__setattr__(self, "labels", labels)

    @classmethod
    def _trusted(
        cls,
        uniformity: int,
        vertex_count: int,
        edges: tuple[Edge, ...],
        labels: tuple[Label, ...] | None,
    ) -> UniformHypergraph:
        """Build without validation; ``edges`` must already be canonical."""

        instance = cls.__new__(cls)
        object.__setattr__(instance, "uniformity", uniformity)
        object.__setattr__(instance, "vertex_count", vertex_count)
        object.__setattr__(instance, "edges", edges)
        object.__setattr__(instance, "labels", labels)
        return instance

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        array = np.array(self.edges, dtype=np.int64).reshape(len(self.edges), self.uniformity)
        array.setflags(write=False)
        return array

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        masks = []
        for edge in self.edges:
            mask = 0
            for vertex in edge:
                mask |= 1 << vertex
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices through each vertex."""

        buckets: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for position, edge in enumerate(self.edges):
            for vertex in edge:
                buckets[vertex].append(position)
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(bucket) for bucket in self.incidence)

    @cached_property
    def _label_index(self) -> dict[Label, int]:
        if self.labels is None:
            return {}
        return {label: index for index, label in enumerate(self.labels)}

    def label_of(self, index: int) -> Label:
        if self.labels is None:
            return index
        return self.labels[index]

    def index_of(self, label: Label) -> int:
        """Vertex index carrying ``label`` (the index itself when unlabelled)."""

        key = _normalize_label(label)
        if self.labels is None:
            if isinstance(key, int) and 0 <= key < self.vertex_count:
                return key
        elif key in self._label_index:
            return self._label_index[key]
        raise InputError(f"Unknown vertex label {label!r}.", payload={"field": "vertex"})

    def subset(self, labels: Iterable[Label]) -> VertexSubset:
        """Vertex subset given by domain labels."""

        return VertexSubset(self.vertex_count, tuple(self.index_of(label) for label in labels))

    def full_subset(self) -> VertexSubset:
        return VertexSubset.full(self.vertex_count)

    def labelled_edges(self) -> list[tuple[Label, ...]]:
        return [tuple(self.label_of(vertex) for vertex in edge) for edge in self.edges]
