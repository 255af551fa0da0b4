from __future__ import annotations
from dataclasses import dataclass
import logging
import numpy as np

from .Variation import variation_power_many, jump_sup_many
from core.parallel import WorkerPool
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument

logger = logging.getLogger("oscillation")

def dyadic_martingale(f: WeightSeries, K: int, k: int) -> WeightSeries:
    '''
    E_k f: averages of f over the intervals [jK2^k, (j+1)K2^k), f taken
    as zero outside its window. The result covers every block meeting it.
    '''
    if K < 1 or k < 0:
        raise InvalidArgument(f"Invalid martingale level: K={K}, k={k}")
    size = K << k
    lo = (f.start // size) * size
    hi = -(-f.stop // size) * size
    means = f.window(lo, hi).reshape(-1, size).mean(axis=1)
    return WeightSeries(label=f"E[{K}*2^{k}]{f.label}", start=lo, values=np.repeat(means, size))

def martingale_levels(values: np.ndarray, K: int = 1) -> np.ndarray:
    '''
    Rows E_0 f, ..., E_top f for f on [0, K 2^top); shape (top + 1, len).
    '''
    length = values.size
    top = (length // K).bit_length() - 1
    rows = np.empty((top + 1, length), dtype=values.dtype)
    for k in range(top + 1):
        size = K << k
        rows[k] = np.repeat(values.reshape(-1, size).mean(axis=1), size)
    return rows

@dataclass(frozen=True)
class LepingleRecord:
    r: float
    trials: int
    length: int
    signal: str
    max_ratio: float      # max ||V^r(E_k f)||_2 / ||f||_2
    max_jump_ratio: float # max sup_lam ||lam N_lam^(1/2)||_2 / ||f||_2, over every critical lam

    @property
    def guard(self) -> float:
        return 10.0 * self.r / (self.r - 2.0)

    def as_dict(self) -> dict:
        return {"r": self.r, "trials": self.trials, "length": self.length, "signal": self.signal,
                "max_ratio": self.max_ratio, "max_jump_ratio": self.max_jump_ratio}

class LepingleCheck:
    '''
    Monte-Carlo constants in the variational and jump inequalities
    for the dyadic martingale E_k f.
    '''

    def __init__(self, pool: WorkerPool | None = None):
        self.pool = pool or WorkerPool.default()

    @staticmethod
    def signal(rng: np.random.Generator, length: int, kind: str) -> np.ndarray:
        if kind == "rademacher":
            return rng.choice(np.array([-1.0, 1.0]), size=length)
        if kind == "gaussian":
            return rng.standard_normal(length)
        raise InvalidArgument(f"Invalid signal kind: {kind}")

    @staticmethod
    def ratios(f: np.ndarray, r: float) -> tuple[float, float]:
        '''
        Returns the variation and jump ratios of one signal on [0, len).
        '''
        norm = float(np.sqrt(np.sum(np.abs(f) ** 2)))
        if norm == 0:
            return 0.0, 0.0
        rows = martingale_levels(f)
        var = variation_power_many(rows, r) ** (1.0 / r)
        var_ratio = float(np.sqrt(np.sum(var ** 2))) / norm
        return var_ratio, jump_sup_many(rows) / norm

    def run(self, trials: int, length: int, r: float, seed: int, kind: str = "rademacher") -> LepingleRecord:
        if r <= 2:
            raise InvalidArgument(f"Invalid variation exponent: r={r} <= 2")
        if length < 1 or length & (length - 1):
            raise InvalidArgument(f"Invalid signal length: {length} is not a power of two")
        seeds = np.random.SeedSequence(seed).spawn(trials)

        def trial(child: np.random.SeedSequence) -> tuple[float, float]:
            return self.ratios(self.signal(np.random.default_rng(child), length, kind), r)

        results = self.pool.map(trial, seeds)
        record = LepingleRecord(r=r, trials=trials, length=length, signal=kind,
                                max_ratio=max(v for v, _ in results),
                                max_jump_ratio=max(j for _, j in results))
        logger.info(f"Lepingle check. r: {r}. Trials: {trials}. Length: {length}. "
                    f"Max ratio: {record.max_ratio}. Max jump ratio: {record.max_jump_ratio}.")
        return record
