from .WorkerPool import WorkerPool

__all__ = ["WorkerPool"]
