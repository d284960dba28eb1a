"""Declarative description of a configuration family."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any

from transference_lab.errors import InputError
from transference_lab.hypergraphs import UniformHypergraph
from transference_lab.matrices import IntegerMatrix, is_irredundant, schur_matrix

Point = tuple[int, ...]


class FamilyVariant(str, Enum):
    AP = "ap"
    HOMOTHETIC = "homothetic"
    LINEAR = "linear"
    SCHUR = "schur"
    FCOPIES = "fcopies"


def normalize_points(points: Iterable[Any], dimension: int) -> tuple[Point, ...]:
    """Coerce integers (dimension 1) or integer tuples into distinct points of N^dimension."""

    normalized: list[Point] = []
    for raw in points:
        if isinstance(raw, int) and not isinstance(raw, bool):
            point: Point = (raw,)
        else:
            try:
                point = tuple(int(coordinate) for coordinate in raw)
            except (TypeError, ValueError) as exc:
                raise InputError(
                    f"Point {raw!r} is not an integer vector.", payload={"field": "points"}
                ) from exc
        if len(point) != dimension:
            raise InputError(
                f"Point {point} does not have dimension {dimension}.", payload={"field": "points"}
            )
        if any(coordinate < 0 for coordinate in point):
            raise InputError(
                f"Point {point} has a negative coordinate.", payload={"field": "points"}
            )
        normalized.append(point)
    if len(set(normalized)) != len(normalized):
        raise InputError("Configuration points must be distinct.", payload={"field": "points"})
    return tuple(normalized)


def has_repeated_vertex(F: UniformHypergraph) -> bool:
    return any(d >= 2 for d in F.degrees)


@dataclass(frozen=True)
class ConfigSpec:
    """One of the five configuration families together with its ambient size ``n``.

    Only the fields of the chosen variant are consulted: ``k`` for AP,
    ``dimension`` and ``points`` for homothetic copies, ``matrix`` for
    linear systems, ``dimension`` and ``pattern`` for F-copies.
    """

    variant: FamilyVariant
    n: int
    k: int | None = None
    dimension: int | None = None
    points: tuple[Point, ...] | None = None
    matrix: IntegerMatrix | None = None
    pattern: UniformHypergraph | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", FamilyVariant(self.variant))
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InputError(
                f"n must be a positive integer, got {self.n!r}.", payload={"field": "n"}
            )

        if self.variant is FamilyVariant.AP:
            if self.k is None or self.k < 3:
                raise InputError(
                    f"Arithmetic progressions need k >= 3, got {self.k}.", payload={"field": "k"}
                )
        elif self.variant is FamilyVariant.HOMOTHETIC:
            dimension = self.dimension or 1
            if self.points is None:
                raise InputError(
                    "Homothetic family needs a point set.", payload={"field": "points"}
                )
            points = normalize_points(self.points, dimension)
            if len(points) < 3:
                raise InputError(
                    f"Homothetic family needs |F| >= 3, got {len(points)}.",
                    payload={"field": "points"},
                )
            object.__setattr__(self, "dimension", dimension)
            object.__setattr__(self, "points", points)
        elif self.variant is FamilyVariant.LINEAR:
            if self.matrix is None:
                raise InputError("Linear family needs a matrix.", payload={"field": "matrix"})
            if not is_irredundant(self.matrix):
                raise InputError(
                    "Linear family needs an irredundant matrix.", payload={"field": "matrix"}
                )
        elif self.variant is FamilyVariant.FCOPIES:
            F = self.require_pattern()
            dimension = self.dimension or F.uniformity
            if dimension != F.uniformity:
                raise InputError(
                    f"Pattern is {F.uniformity}-uniform, expected {dimension}.",
                    payload={"field": "dimension"},
                )
            if not has_repeated_vertex(F):
                raise InputError(
                    "Pattern needs a vertex contained in at least two edges.",
                    payload={"field": "pattern"},
                )
            object.__setattr__(self, "dimension", dimension)

    @classmethod
    def ap(cls, n: int, k: int) -> ConfigSpec:
        return cls(FamilyVariant.AP, n, k=k)

    @classmethod
    def homothetic(cls, n: int, points: Iterable[Any], dimension: int = 1) -> ConfigSpec:
        return cls(FamilyVariant.HOMOTHETIC, n, dimension=dimension, points=tuple(points))

    @classmethod
    def linear(cls, n: int, matrix: IntegerMatrix) -> ConfigSpec:
        return cls(FamilyVariant.LINEAR, n, matrix=matrix)

    @classmethod
    def schur(cls, n: int) -> ConfigSpec:
        return cls(FamilyVariant.SCHUR, n)

    @classmethod
    def fcopies(cls, n: int, pattern: UniformHypergraph) -> ConfigSpec:
        return cls(FamilyVariant.FCOPIES, n, dimension=pattern.uniformity, pattern=pattern)

    def with_n(self, n: int) -> ConfigSpec:
        return ConfigSpec(
            self.variant,
            n,
            k=self.k,
            dimension=self.dimension,
            points=self.points,
            matrix=self.matrix,
            pattern=self.pattern,
        )

    def require_pattern(self) -> UniformHypergraph:
        if self.pattern is None:
            raise InputError(
                "F-copies family needs a pattern hypergraph.", payload={"field": "pattern"}
            )
        return self.pattern

    @property
    def linear_matrix(self) -> IntegerMatrix:
        if self.variant is FamilyVariant.SCHUR:
            return schur_matrix()
        if self.matrix is None:
            raise InputError(
                f"Family {self.variant.value} has no matrix.", payload={"field": "matrix"}
            )
        return self.matrix

    @property
    def uniformity(self) -> int:
        """Edge size of the configuration hypergraph."""

        if self.variant is FamilyVariant.AP:
            return int(self.k or 0)
        if self.variant is FamilyVariant.HOMOTHETIC:
            return len(self.points or ())
        if self.variant is FamilyVariant.FCOPIES:
            return self.require_pattern().edge_count
        return self.linear_matrix.column_count

    @cached_property
    def threshold_exponent(self) -> Fraction:
        from transference_lab.matrices.exponents import threshold_exponent

        return threshold_exponent(self)

    def threshold_probability(self, n: int | None = None) -> float:
        """p_n = n^(-theta)."""

        size = self.n if n is None else n
        return float(size) ** (-float(self.threshold_exponent))
