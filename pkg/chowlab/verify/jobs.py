"""
A small worker pool for verification work.

Suites cut their enumerations into partitions (inversion-sequence or
permutation prefixes, or single values of ``n``) and hand a top-level task
function plus the partitions to ``WorkerPool.map``. With one thread the tasks
run in process; otherwise they run in a ``ProcessPoolExecutor``. Results come
back in partition order either way, so reports do not depend on the thread
count.
"""
from __future__ import annotations

import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

P = TypeVar("P")
R = TypeVar("R")


class WorkerPool:
    """Context manager that owns an optional process pool."""

    def __init__(self, threads: int = 1):
        self.threads = max(1, threads)
        self._executor: Optional[Executor] = None

    def __enter__(self) -> "WorkerPool":
        if self.threads > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.threads)
            logger.debug("started %d worker processes", self.threads)
        return self

    def __exit__(self, *exc) -> None:
        self.stop()

    def stop(self) -> None:
        """Shuts the pool down and waits for running tasks."""
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None

    def map(self, task: Callable[[P], R], partitions: Iterable[P]) -> List[R]:
        """Runs ``task`` on every partition and returns results in order."""
        partitions = list(partitions)
        if self._executor is None or len(partitions) <= 1:
            return [task(p) for p in partitions]
        return list(self._executor.map(task, partitions))
