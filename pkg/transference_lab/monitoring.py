"""Wall-time capture for searches, sweeps and other long-running steps."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass, field
from time import perf_counter
from typing import Any

LOG_EVENT_NAME = "performance.timing"

logger = logging.getLogger(__name__)


@dataclass
class TimingSettings:
    enabled: bool = False
    threshold_ms: float | None = None

    def should_log(self, duration_ms: float) -> bool:
        if self.enabled:
            return True
        return self.threshold_ms is not None and duration_ms >= self.threshold_ms


@dataclass
class TimingScope:
    """Handle yielded by ``timed_operation``; callers attach what the block produced."""

    event: str
    fields: dict[str, Any] = field(default_factory=dict)
    truncated: bool = False

    def note(self, **values: Any) -> None:
        self.fields.update(values)

    def mark_truncated(self) -> None:
        self.truncated = True


_settings = TimingSettings()


def configure_timing(*, enabled: bool, threshold_ms: float | None) -> None:
    """Set whether timings are always logged and the slow-operation threshold."""

    _settings.enabled = bool(enabled)
    _settings.threshold_ms = None if threshold_ms is None else float(threshold_ms)


def _payload(scope: TimingScope, duration_ms: float, error: Exception | None) -> dict[str, Any]:
    if error is not None:
        status = "error"
    elif scope.truncated:
        status = "truncated"
    else:
        status = "success"
    payload: dict[str, Any] = {
        "event": scope.event or LOG_EVENT_NAME,
        "duration_ms": round(duration_ms, 3),
        "source": "performance",
        "status": status,
    }
    payload.update((str(key), value) for key, value in scope.fields.items())
    if error is not None:
        payload["error"] = str(error)
    return payload


@contextmanager
def timed_operation(
    event: str,
    *,
    metadata: Mapping[str, Any] | None = None,
    log: logging.Logger | None = None,
) -> Iterator[TimingScope]:
    """Time the block and log it when timing is enabled or the block ran long.

    Truncated searches and failures log at WARNING, everything else at INFO.
    """

    scope = TimingScope(event, dict(metadata or {}))
    start = perf_counter()
    error: Exception | None = None
    try:
        yield scope
    except Exception as exc:
        error = exc
        raise
    finally:
        duration_ms = (perf_counter() - start) * 1000
        if _settings.should_log(duration_ms):
            payload = _payload(scope, duration_ms, error)
            target = log or logger
            if payload["status"] == "success":
                target.info("Timing captured", extra=payload)
            else:
                target.warning("Timing captured (%s)", payload["status"], extra=payload)
