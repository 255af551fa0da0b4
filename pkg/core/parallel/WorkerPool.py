from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar
import logging

logger = logging.getLogger("runner")

T = TypeVar("T")
R = TypeVar("R")

class WorkerPool:
    '''
    Thread pool for independent numeric tasks.

    map() always returns results in submission order, so reductions
    over them are order-fixed. threads == 1 or deterministic runs inline.
    '''

    threads: int        # worker count
    deterministic: bool # forces inline sequential execution

    _default: WorkerPool | None = None

    def __init__(self, threads: int = 1, deterministic: bool = False):
        if threads < 1:
            raise ValueError(f"Invalid thread count: {threads}")
        self.threads = threads
        self.deterministic = deterministic

    @classmethod
    def configure(cls, threads: int, deterministic: bool) -> "WorkerPool":
        '''
        Sets the process-wide default pool.
        '''
        cls._default = cls(threads=threads, deterministic=deterministic)
        logger.info(f"Worker pool configured. Threads: {threads}. Deterministic: {deterministic}.")
        return cls._default

    @classmethod
    def default(cls) -> "WorkerPool":
        if cls._default is None:
            cls._default = cls()
        return cls._default

    @property
    def inline(self) -> bool:
        return self.threads == 1 or self.deterministic

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        items = list(items)
        if self.inline or len(items) < 2:
            return [fn(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(fn, items))

    @staticmethod
    def blocks(count: int, size: int) -> list[range]:
        '''
        Splits range(count) into contiguous blocks of at most size.
        '''
        return [range(lo, min(lo + size, count)) for lo in range(0, count, size)]
