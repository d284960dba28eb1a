"""Crossing points of the AP threshold curve for several n.

Runs one sweep per n over a C-grid of multiples of n^(-1/m) and prints the
fitted crossing q* next to the rescaled value q* n^(1/m). When the threshold
sits at the predicted order, the rescaled column stays within a constant band.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

sys.path.append(os.fspath(os.getcwd()))

from transference_lab import create_lab  # noqa: E402
from transference_lab.generators import ConfigSpec  # noqa: E402
from transference_lab.harness import ExperimentManifest, QSchedule, sweep  # noqa: E402

DEFAULT_SIZES = (100, 225, 400)
DEFAULT_GRID = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)


@dataclass(slots=True)
class ScalingRow:
    n: int
    q_star: float | None
    rescaled: float | None
    undecided: int
    duration_s: float


def run_scaling(
    sizes: tuple[int, ...],
    *,
    k: int,
    epsilon: Fraction,
    trials: int,
    seed: int,
    jobs: int,
    budget: int,
) -> list[ScalingRow]:
    rows = []
    for n in sizes:
        spec = ConfigSpec.ap(n, k)
        manifest = ExperimentManifest(
            spec=spec,
            epsilon=epsilon,
            schedule=QSchedule.c_grid(DEFAULT_GRID),
            trials=trials,
            seed=seed,
            budget=budget,
        )
        start = time.perf_counter()
        curve = sweep(manifest, jobs=jobs)
        duration_s = time.perf_counter() - start

        crossing = curve.crossing
        q_star = crossing.q_star if crossing is not None and crossing.found else None
        rescaled = None if q_star is None else q_star / spec.threshold_probability()
        rows.append(
            ScalingRow(
                n=n,
                q_star=q_star,
                rescaled=rescaled,
                undecided=sum(row.undecided for row in curve.rows),
                duration_s=duration_s,
            )
        )
    return rows


def _print_rows(rows: list[ScalingRow]) -> None:
    print(f"{'n':>6} {'q*':>10} {'q*/p_n':>8} {'undecided':>10} {'seconds':>9}")
    for row in rows:
        q_star = "none" if row.q_star is None else f"{row.q_star:.5f}"
        rescaled = "-" if row.rescaled is None else f"{row.rescaled:.3f}"
        print(f"{row.n:>6} {q_star:>10} {rescaled:>8} {row.undecided:>10} {row.duration_s:9.1f}")

    found = [row.rescaled for row in rows if row.rescaled is not None]
    if len(found) >= 2:
        print(f"\nmax/min of q*/p_n: {max(found) / min(found):.3f}")


def main() -> None:
    parser = argparse.ArgumentParser(description="Threshold crossing scaling for k-term APs.")
    parser.add_argument(
        "--n",
        dest="sizes",
        type=int,
        action="append",
        help=f"Ground-set size (repeatable, default {', '.join(map(str, DEFAULT_SIZES))}).",
    )
    parser.add_argument("--k", type=int, default=3, help="Progression length (default 3).")
    parser.add_argument("--epsilon", default="1/2", help="Density epsilon (default 1/2).")
    parser.add_argument("--trials", type=int, default=200, help="Trials per q (default 200).")
    parser.add_argument("--seed", type=int, default=None, help="Master seed.")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes (default 1).")
    args = parser.parse_args()

    lab = create_lab("default")
    rows = run_scaling(
        tuple(args.sizes or DEFAULT_SIZES),
        k=args.k,
        epsilon=Fraction(args.epsilon),
        trials=args.trials,
        seed=lab.seed if args.seed is None else args.seed,
        jobs=args.jobs,
        budget=lab.budget,
    )
    _print_rows(rows)


if __name__ == "__main__":
    main()
