"""Order-preserving fan-out of independent tasks."""

from __future__ import annotations

import logging
import multiprocessing as mp
from collections.abc import Callable, Iterable, Sequence
from typing import Any, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)

_shared: dict[str, Any] = {}


def _install_shared(worker: Callable[[Any, Any], Any], shared: Any) -> None:
    _shared["worker"] = worker
    _shared["payload"] = shared


def _call_shared(task: Any) -> Any:
    return _shared["worker"](_shared["payload"], task)


def map_ordered(
    worker: Callable[[Any, T], R],
    tasks: Iterable[T],
    *,
    shared: Any = None,
    jobs: int = 1,
    chunksize: int = 1,
) -> list[R]:
    """Apply ``worker(shared, task)`` to every task and return results in task order.

    ``worker`` must be a module-level function when ``jobs > 1``. ``shared`` is
    shipped once per worker process rather than once per task.
    """

    task_list: Sequence[T] = list(tasks)
    if jobs <= 1 or len(task_list) <= 1:
        return [worker(shared, task) for task in task_list]

    processes = min(jobs, len(task_list))
    logger.debug("Dispatching %s tasks to %s worker processes", len(task_list), processes)
    with mp.get_context("spawn").Pool(
        processes=processes,
        initializer=_install_shared,
        initargs=(worker, shared),
    ) as pool:
        return list(pool.imap(_call_shared, task_list, chunksize=max(1, chunksize)))
