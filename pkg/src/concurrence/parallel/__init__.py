"""
Parallel processing module for the randomized check suite.

Trials are independent and each owns its sampler, so they can run on a
thread pool and be aggregated in any order.
"""

from .worker_pool import WorkerPool

__all__ = ["WorkerPool"]
