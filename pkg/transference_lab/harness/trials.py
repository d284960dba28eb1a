"""Monte-Carlo estimation of P[property holds on V_q] and q-sweeps."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from scipy.stats import norm

from transference_lab.errors import InputError
from transference_lab.generators import build_hypergraph
from transference_lab.hypergraphs import UniformHypergraph
from transference_lab.logging import run_log_extra
from transference_lab.monitoring import timed_operation
from transference_lab.parallel import map_ordered
from transference_lab.solver import Verdict, arrow_decide, turan_decide
from transference_lab.validation import validate_probability

from .crossing import CrossingEstimate, estimate_crossing
from .manifest import ExperimentManifest
from .sampling import sample_subset

logger = logging.getLogger(__name__)

DEFAULT_UNDECIDED_TOLERANCE = 0.10
_TRIALS_PER_TASK = 25
_Z95 = float(norm.ppf(0.975))


@dataclass(frozen=True)
class CurveRow:
    """One q of a threshold curve; undecided trials are excluded from the estimate."""

    q: float
    trials: int
    successes: int
    undecided: int
    vacuous: int
    estimate: float
    ci_lo: float
    ci_hi: float
    unreliable: bool

    @property
    def failures(self) -> int:
        return self.trials - self.successes - self.undecided

    @property
    def decided(self) -> int:
        return self.trials - self.undecided


@dataclass(frozen=True)
class ThresholdCurve:
    rows: tuple[CurveRow, ...]
    crossing: CrossingEstimate | None = None

    @property
    def unreliable(self) -> bool:
        return any(row.unreliable for row in self.rows)


def wilson_interval(successes: int, total: int, z: float = _Z95) -> tuple[float, float]:
    """Wilson score interval; (0, 1) when nothing was observed."""

    if total <= 0:
        return 0.0, 1.0
    phat = successes / total
    denominator = 1 + z * z / total
    centre = (phat + z * z / (2 * total)) / denominator
    half = z * math.sqrt(phat * (1 - phat) / total + z * z / (4 * total * total)) / denominator
    return max(0.0, min(phat, centre - half)), min(1.0, max(phat, centre + half))


def summarize_row(
    q: float,
    successes: int,
    undecided: int,
    trials: int,
    *,
    vacuous: int = 0,
    tolerance: float = DEFAULT_UNDECIDED_TOLERANCE,
) -> CurveRow:
    if successes + undecided > trials:
        raise InputError(
            "successes + undecided cannot exceed the trial count.", payload={"field": "trials"}
        )
    decided = trials - undecided
    estimate = successes / decided if decided else 0.0
    ci_lo, ci_hi = wilson_interval(successes, decided)
    return CurveRow(
        q=q,
        trials=trials,
        successes=successes,
        undecided=undecided,
        vacuous=vacuous,
        estimate=estimate,
        ci_lo=ci_lo,
        ci_hi=ci_hi,
        unreliable=undecided > tolerance * trials,
    )


@dataclass(frozen=True)
class _TrialPlan:
    H: UniformHypergraph
    q: float
    q_index: int
    seed: int
    epsilon: Fraction
    pi: Fraction | None
    budget: int


def _trial_chunk(plan: _TrialPlan, trial_range: tuple[int, int]) -> list[tuple[str, bool]]:
    outcomes = []
    for trial in range(*trial_range):
        X = sample_subset(plan.H.vertex_count, plan.q, plan.seed, q_index=plan.q_index, trial=trial)
        if plan.pi is None:
            result = arrow_decide(plan.H, X, plan.epsilon, plan.budget)
        else:
            result = turan_decide(plan.H, X, plan.pi, plan.epsilon, plan.budget)
        outcomes.append((result.verdict.value, result.vacuous))
    return outcomes


def run_trials(
    manifest: ExperimentManifest,
    q: float,
    *,
    q_index: int = 0,
    hypergraph: UniformHypergraph | None = None,
    jobs: int = 1,
    tolerance: float = DEFAULT_UNDECIDED_TOLERANCE,
) -> CurveRow:
    """Decide the property on ``manifest.trials`` independent samples V_q.

    Arrow families use ``arrow_decide``; the F-copies family decides the
    Turan inequality on the sampled host edges with pi(F) from the manifest.
    """

    q = validate_probability(q)
    H = hypergraph if hypergraph is not None else build_hypergraph(manifest.spec)
    plan = _TrialPlan(
        H=H,
        q=q,
        q_index=q_index,
        seed=manifest.seed,
        epsilon=manifest.epsilon,
        pi=manifest.resolved_turan_density() if manifest.turan_variant else None,
        budget=manifest.budget,
    )
    ranges = [
        (start, min(manifest.trials, start + _TRIALS_PER_TASK))
        for start in range(0, manifest.trials, _TRIALS_PER_TASK)
    ]
    with timed_operation(
        "harness.trials", metadata={"q": q, "trials": manifest.trials}
    ) as scope:
        chunks = map_ordered(_trial_chunk, ranges, shared=plan, jobs=jobs)
        scope.note(tasks=len(ranges), jobs=jobs)

    successes = undecided = vacuous = 0
    for chunk in chunks:
        for verdict, was_vacuous in chunk:
            if verdict == Verdict.HOLDS.value:
                successes += 1
                vacuous += int(was_vacuous)
            elif verdict == Verdict.UNDECIDED.value:
                undecided += 1

    row = summarize_row(
        q, successes, undecided, manifest.trials, vacuous=vacuous, tolerance=tolerance
    )
    log = logger.warning if row.unreliable else logger.info
    log(
        "q=%.6g: %s/%s successes, %s undecided",
        q,
        successes,
        manifest.trials,
        undecided,
        extra=run_log_extra(
            event="harness.row",
            command="sweep",
            status="unreliable" if row.unreliable else "ok",
            q=q,
            trials=manifest.trials,
            successes=successes,
            undecided=undecided,
            unreliable=row.unreliable,
        ),
    )
    return row


def sweep(
    manifest: ExperimentManifest,
    *,
    jobs: int = 1,
    tolerance: float = DEFAULT_UNDECIDED_TOLERANCE,
    on_row: Callable[[CurveRow], None] | None = None,
) -> ThresholdCurve:
    """run_trials for every scheduled q, in schedule order; ``on_row`` sees each row as it lands."""

    q_values = manifest.q_values
    if not q_values:
        raise InputError("The q schedule is empty.", payload={"field": "schedule"})

    H = build_hypergraph(manifest.spec)
    if H.edge_count == 0:
        logger.warning("Configuration hypergraph has no edges; every sample fails for |X| > 0")

    rows = []
    for index, q in enumerate(q_values):
        row = run_trials(
            manifest, q, q_index=index, hypergraph=H, jobs=jobs, tolerance=tolerance
        )
        rows.append(row)
        if on_row is not None:
            on_row(row)

    crossing = estimate_crossing(rows) if len(rows) >= 2 else None
    return ThresholdCurve(rows=tuple(rows), crossing=crossing)
