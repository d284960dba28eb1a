"""Empirical (K, p)-boundedness over a grid of probabilities."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from transference_lab.errors import InputError
from transference_lab.generators import ConfigSpec, build_hypergraph
from transference_lab.monitoring import timed_operation
from transference_lab.validation import validate_positive_int

from .mu import OverlapProfile, mu_exact

logger = logging.getLogger(__name__)

# relative slack when comparing grid values against p_n
_P_TOLERANCE = 1e-12


@dataclass(frozen=True)
class QGrid:
    """Either ``points`` geometric values from p_n up to ``upper`` or an explicit list."""

    points: int = 20
    upper: float = 1.0
    explicit: tuple[float, ...] | None = None

    def values(self, p_n: float) -> tuple[float, ...]:
        if self.explicit is not None:
            values = tuple(float(q) for q in self.explicit)
            if not values:
                raise InputError("q grid is empty.", payload={"field": "q_grid"})
            for q in values:
                if not 0.0 < q <= 1.0:
                    raise InputError(f"q = {q} is outside (0, 1].", payload={"field": "q_grid"})
                if q < p_n * (1 - _P_TOLERANCE):
                    raise InputError(
                        f"q = {q} lies below p_n = {p_n:.6g}.", payload={"field": "q_grid"}
                    )
            return values
        validate_positive_int(self.points, field="points")
        if not p_n <= self.upper <= 1.0:
            raise InputError(
                f"Grid upper end {self.upper} must lie in [p_n, 1].", payload={"field": "q_grid"}
            )
        if self.points == 1:
            return (p_n,)
        return tuple(float(q) for q in np.geomspace(p_n, self.upper, self.points))


@dataclass(frozen=True)
class BoundednessRow:
    n: int
    i: int
    q: float
    mu: float
    bound_ratio: float


@dataclass(frozen=True)
class BoundednessReport:
    """mu_i over the grid; ``bound_ratio`` = mu |V| / (q^(2i) |E|^2) and K_min is its maximum."""

    rows: tuple[BoundednessRow, ...]
    sizes: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def k_min(self) -> dict[tuple[int, int], float]:
        result: dict[tuple[int, int], float] = {}
        for row in self.rows:
            key = (row.n, row.i)
            result[key] = max(result.get(key, 0.0), row.bound_ratio)
        return result

    @property
    def overall_k_min(self) -> float:
        return max(self.k_min.values(), default=0.0)

    def recomputed_k_min(self) -> dict[tuple[int, int], float]:
        """K_min rebuilt from the stored mu values and hypergraph sizes."""

        result: dict[tuple[int, int], float] = {}
        for row in self.rows:
            vertices, edges = self.sizes[row.n]
            ratio = bound_ratio(row.mu, row.q, row.i, vertices, edges)
            key = (row.n, row.i)
            result[key] = max(result.get(key, 0.0), ratio)
        return result


def bound_ratio(mu: float, q: float, i: int, vertices: int, edges: int) -> float:
    return mu * vertices / (q ** (2 * i) * edges**2)


def certify_boundedness(
    family: ConfigSpec,
    n_list: Iterable[int],
    i: int | Sequence[int],
    q_grid: QGrid | None = None,
) -> BoundednessReport:
    """Evaluate mu_i on the grid for each n and collect the K needed at each point."""

    grid = q_grid or QGrid()
    levels = (i,) if isinstance(i, int) else tuple(i)
    sizes_list = [validate_positive_int(n, field="n") for n in n_list]
    if not sizes_list:
        raise InputError("n_list is empty.", payload={"field": "n_list"})

    rows: list[BoundednessRow] = []
    sizes: dict[int, tuple[int, int]] = {}
    for n in sizes_list:
        H = build_hypergraph(family.with_n(n))
        if H.edge_count == 0:
            raise InputError("empty configuration family", payload={"field": "family", "n": n})
        p_n = family.threshold_probability(n)
        q_values = grid.values(p_n)
        sizes[n] = (H.vertex_count, H.edge_count)
        with timed_operation("boundedness.profile", metadata={"n": n, "edges": H.edge_count}):
            profile = OverlapProfile.of(H)
        for level in levels:
            for q in q_values:
                mu = mu_exact(H, level, q, profile=profile)
                rows.append(
                    BoundednessRow(
                        n=n,
                        i=level,
                        q=q,
                        mu=mu,
                        bound_ratio=bound_ratio(mu, q, level, H.vertex_count, H.edge_count),
                    )
                )
        logger.debug(
            "Boundedness grid evaluated",
            extra={"event": "boundedness.grid", "n": n, "p_n": p_n, "points": len(q_values)},
        )
    return BoundednessReport(rows=tuple(rows), sizes=sizes)
