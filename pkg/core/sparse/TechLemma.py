from __future__ import annotations
from dataclasses import dataclass, field
import logging
import numpy as np

from .SparseWeight import SparseWeight, FourierL1, delta_h_fourier_l1, MIN_OVERSAMPLE
from core.parallel import WorkerPool
from lab.LabExceptions import InvalidArgument

logger = logging.getLogger("sparse")

MAX_LOG2N = 16

@dataclass(frozen=True)
class TechLemmaStats:
    c: float
    N: int
    eps_prime: float
    rows: list[FourierL1] = field(repr=False)

    @property
    def max_exponent(self) -> float:
        return max(row.exponent(self.N) for row in self.rows)

    @property
    def bad_fraction(self) -> float:
        '''
        Share of sampled h with norm above N^(1/2 - eps').
        '''
        threshold = self.N ** (0.5 - self.eps_prime)
        return sum(row.l1_norm > threshold for row in self.rows) / len(self.rows)

    @property
    def bound_violations(self) -> int:
        '''
        Rows breaking ||F(Delta_h W)||_1 <= ||Delta_h W||_2 (support)^(1/2).
        '''
        return sum(not row.within_trivial_bound for row in self.rows)

    @property
    def exponent_bound(self) -> float:
        '''
        1/2 + (1 - 1/c), the exponent the maximum is measured against.
        '''
        return 0.5 + (1.0 - 1.0 / self.c)

    def summary(self) -> dict:
        return {"c": self.c, "N": self.N, "samples": len(self.rows),
                "max_exponent": self.max_exponent, "bad_fraction": self.bad_fraction,
                "eps_prime": self.eps_prime, "bound_violations": self.bound_violations}

class TechLemma:
    '''
    Difference-Fourier L^1 statistics of W_c over a sample of shifts h.
    '''

    def __init__(self, pool: WorkerPool | None = None, eps_prime: float = 0.05,
                 oversample: int = MIN_OVERSAMPLE):
        self.pool = pool or WorkerPool.default()
        self.eps_prime = eps_prime
        self.oversample = oversample

    @staticmethod
    def sample_shifts(N: int, h_samples: int, seed: int) -> np.ndarray:
        '''
        Half a deterministic stride over [1, N], half seeded uniform draws.
        '''
        stride_count = max(1, h_samples // 2)
        stride = 1 + (np.arange(stride_count, dtype=np.int64) * N) // stride_count
        rng = np.random.default_rng(seed)
        drawn = rng.integers(1, N + 1, size=h_samples - stride_count)
        return np.unique(np.concatenate([stride, drawn]))

    def stats(self, c: float, log2N: int, h_samples: int = 256, seed: int = 0) -> TechLemmaStats:
        if not 1 <= log2N <= MAX_LOG2N:
            raise InvalidArgument(f"Invalid scale: log2N={log2N}")
        if h_samples < 1:
            raise InvalidArgument(f"Invalid sample count: {h_samples}")
        N = 1 << log2N
        W = SparseWeight.build(c, N)
        shifts = self.sample_shifts(N, h_samples, seed)

        def block(hs: np.ndarray) -> list[FourierL1]:
            return [delta_h_fourier_l1(W, int(h), self.oversample) for h in hs]

        parts = self.pool.map(block, np.array_split(shifts, max(1, self.pool.threads)))
        rows = [row for part in parts for row in part]
        result = TechLemmaStats(c=c, N=N, eps_prime=self.eps_prime, rows=rows)
        if result.bound_violations:
            logger.warning(f"Trivial L1 bound broken at {result.bound_violations} of {len(rows)} shifts. c: {c}. N: {N}.")
        logger.info(f"Tech lemma stats. c: {c}. N: {N}. Max exponent: {result.max_exponent}. "
                    f"Bad fraction: {result.bad_fraction}.")
        return result

    def trend(self, c: float, log2Ns, h_samples: int = 256, seed: int = 0) -> list[dict]:
        return [self.stats(c, log2N, h_samples, seed).summary() for log2N in log2Ns]
