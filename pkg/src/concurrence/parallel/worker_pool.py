"""
Worker Pool for parallel trial execution.

This module implements a pool of worker threads that evaluate independent
trials of the randomized check suite, with support for:
- Active task tracking
- Error capture per task
- Completion-order iteration (callers aggregate order-independently)
"""

import threading
from concurrent.futures import Future, ThreadPoolExecutor, as_completed
from typing import Any, Callable, Iterable, Iterator, TypeVar

from concurrence.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """Pool of workers for parallel trial evaluation."""

    def __init__(self, max_workers: int = 4):
        if max_workers <= 0:
            raise ValueError("Worker pool size must be positive")
        self.max_workers = max_workers
        self.executor = ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix="trial")
        self.active_tasks: dict[int, Future] = {}
        self.lock = threading.Lock()
        self.running = True
        self._next_id = 0

    def __enter__(self) -> "WorkerPool":
        return self

    def __exit__(self, *exc: Any) -> None:
        self.shutdown(wait=True)

    def submit(self, fn: Callable[..., R], *args: Any) -> Future:
        """Submit a callable to the pool."""
        if not self.running:
            raise RuntimeError("Worker pool is not running")

        with self.lock:
            task_id = self._next_id
            self._next_id += 1

        future = self.executor.submit(self._run_task, task_id, fn, *args)
        with self.lock:
            self.active_tasks[task_id] = future
        return future

    def _run_task(self, task_id: int, fn: Callable[..., R], *args: Any) -> R:
        """Worker function to execute a single task."""
        try:
            return fn(*args)
        except Exception as e:
            logger.error("Task %d failed: %s", task_id, e)
            raise
        finally:
            with self.lock:
                self.active_tasks.pop(task_id, None)

    def map_unordered(self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        """Apply ``fn`` to every item, yielding results as they complete."""
        futures = [self.submit(fn, item) for item in items]
        for future in as_completed(futures):
            yield future.result()

    def get_active_task_count(self) -> int:
        """Get the number of currently active tasks."""
        with self.lock:
            return len(self.active_tasks)

    def get_worker_utilization(self) -> float:
        """Get current worker utilization (0.0 to 1.0)."""
        active = self.get_active_task_count()
        return min(active / self.max_workers, 1.0) if self.max_workers > 0 else 0.0

    def shutdown(self, wait: bool = True):
        """Shutdown the worker pool."""
        self.running = False
        self.executor.shutdown(wait=wait)
