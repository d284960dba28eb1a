"""Where an empirical success curve passes 1/2, as a function of log q."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Protocol

import numpy as np
from scipy.optimize import minimize
from scipy.special import expit, log_expit

from transference_lab.errors import InputError

if TYPE_CHECKING:
    from .trials import ThresholdCurve

logger = logging.getLogger(__name__)

BAND_LOW = 0.25
BAND_HIGH = 0.75
RIDGE = 1e-3
_MIN_SLOPE = 1e-9


class CrossingMethod(str, Enum):
    LOGISTIC = "logistic"
    INTERPOLATION = "interpolation"
    NONE = "none"


class _RowLike(Protocol):
    q: float
    successes: int
    undecided: int
    trials: int


@dataclass(frozen=True)
class CrossingEstimate:
    """Fitted midpoint q*; ``q_star is None`` reports "none"."""

    q_star: float | None
    method: CrossingMethod
    rows_used: int
    slope: float | None = None
    midpoint_log_q: float | None = None

    @property
    def found(self) -> bool:
        return self.q_star is not None


def _logistic_fit(x: np.ndarray, successes: np.ndarray, totals: np.ndarray) -> tuple[float, float]:
    """Ridge-penalised binomial MLE of P = expit(a + b x); x is centred by the caller."""

    failures = totals - successes

    def objective(theta: np.ndarray) -> tuple[float, np.ndarray]:
        a, b = theta
        z = a + b * x
        loss = -(successes * log_expit(z) + failures * log_expit(-z)).sum()
        loss += RIDGE * (a * a + b * b)
        residual = successes - totals * expit(z)
        grad = np.array([-residual.sum() + 2 * RIDGE * a, -(residual * x).sum() + 2 * RIDGE * b])
        return float(loss), grad

    result = minimize(objective, np.zeros(2), jac=True, method="BFGS")
    if not result.success and not np.all(np.isfinite(result.x)):
        raise ArithmeticError(result.message)
    a, b = (float(value) for value in result.x)
    return a, b


def _interpolate(log_q: np.ndarray, estimates: np.ndarray) -> float | None:
    for left in range(len(log_q) - 1):
        e0, e1 = estimates[left], estimates[left + 1]
        if (e0 - 0.5) * (e1 - 0.5) <= 0 and e0 != e1:
            weight = (0.5 - e0) / (e1 - e0)
            return float(math.exp(log_q[left] + weight * (log_q[left + 1] - log_q[left])))
    return None


def estimate_crossing(curve: ThresholdCurve | Iterable[_RowLike]) -> CrossingEstimate:
    """Logistic fit of the success rate against log q; q* is the fitted midpoint.

    Rows with no decided trial are ignored. "none" is returned when every
    estimate lies below 0.25 or every estimate lies above 0.75. The fit
    falls back to linear interpolation in log q when it degenerates or puts
    the midpoint outside the sampled range.
    """

    rows: Sequence[_RowLike] = tuple(getattr(curve, "rows", curve))
    if len(rows) < 2:
        raise InputError("Crossing estimation needs at least two rows.", payload={"field": "curve"})
    if any(row.q <= 0 for row in rows):
        raise InputError("Crossing estimation needs q > 0 on every row.", payload={"field": "q"})

    usable = sorted(
        (row for row in rows if row.trials - row.undecided > 0), key=lambda row: row.q
    )
    if len(usable) < 2:
        return CrossingEstimate(None, CrossingMethod.NONE, len(usable))

    log_q = np.log([row.q for row in usable])
    successes = np.array([row.successes for row in usable], dtype=np.float64)
    totals = np.array([row.trials - row.undecided for row in usable], dtype=np.float64)
    estimates = successes / totals

    if estimates.max() < BAND_LOW or estimates.min() > BAND_HIGH:
        return CrossingEstimate(None, CrossingMethod.NONE, len(usable))

    centre = float(log_q.mean())
    try:
        a, b = _logistic_fit(log_q - centre, successes, totals)
    except ArithmeticError as exc:
        logger.info("Logistic fit failed: %s", exc)
        a, b = 0.0, 0.0

    if abs(b) > _MIN_SLOPE:
        midpoint = centre - a / b
        if log_q[0] <= midpoint <= log_q[-1]:
            return CrossingEstimate(
                math.exp(midpoint), CrossingMethod.LOGISTIC, len(usable), b, midpoint
            )

    fallback = _interpolate(log_q, estimates)
    if fallback is None:
        return CrossingEstimate(None, CrossingMethod.NONE, len(usable))
    return CrossingEstimate(
        fallback, CrossingMethod.INTERPOLATION, len(usable), None, math.log(fallback)
    )
