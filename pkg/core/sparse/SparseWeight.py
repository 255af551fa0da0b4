from __future__ import annotations
from dataclasses import dataclass
from typing import Callable
import numpy as np
from scipy import fft

from .PSSequence import PSSequence
from core.gowers import GowersNorm
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument

MIN_OVERSAMPLE = 8

@dataclass(frozen=True)
class SparseWeight:
    '''
    W_c(n) = (1 - c n^(1-1/c) 1_{N_c}(n)) 1_(N/2, N](n).
    '''
    c: float
    N: int
    series: WeightSeries # window (N/2, N]

    @classmethod
    def build(cls, c: float, N: int, sequence: PSSequence | None = None) -> "SparseWeight":
        if N < 2:
            raise InvalidArgument(f"Invalid sparse weight scale: N={N}")
        sequence = sequence or PSSequence.build(c, N)
        lo, hi = N // 2 + 1, N + 1
        n = np.arange(lo, hi, dtype=np.float64)
        values = 1.0 - c * n ** (1.0 - 1.0 / c) * sequence.indicator(lo, hi)
        return cls(c=c, N=N, series=WeightSeries.from_real(f"W[c={c},N={N}]", lo, values))

    def bound(self) -> float:
        return 1.0 + self.c * self.N ** (1.0 - 1.0 / self.c)

    def mean(self) -> float:
        return float(np.mean(self.series.values.real))

@dataclass(frozen=True)
class FourierL1:
    h: int
    l1_norm: float
    spacing: float # Riemann-sum grid step on the circle
    l2_bound: float # ||Delta_h W||_2 (support)^(1/2)

    def exponent(self, N: int) -> float:
        '''
        log_N of the norm; -inf for a vanishing difference.
        '''
        return float(np.log(self.l1_norm) / np.log(N)) if self.l1_norm > 0 else float("-inf")

    @property
    def within_trivial_bound(self) -> bool:
        return self.l1_norm <= self.l2_bound * (1 + 1e-9)

def delta_h_fourier_l1(W: SparseWeight | WeightSeries, h: int, oversample: int = MIN_OVERSAMPLE) -> FourierL1:
    '''
    ||F(Delta_h W)||_{L^1(T)} by a Riemann sum on oversample * support
    equispaced points.
    '''
    if oversample < MIN_OVERSAMPLE:
        raise InvalidArgument(f"Invalid oversampling: {oversample} < {MIN_OVERSAMPLE}")
    series = W.series if isinstance(W, SparseWeight) else W
    diff = GowersNorm.difference(series, h).trimmed()
    v = diff.values
    size = oversample * v.size
    l1 = float(np.mean(np.abs(fft.fft(v, size))))
    l2_bound = float(np.sqrt(np.sum(np.abs(v) ** 2)) * np.sqrt(v.size))
    return FourierL1(h=h, l1_norm=l1, spacing=1.0 / size, l2_bound=l2_bound)

@dataclass(frozen=True)
class ReparamResult:
    lhs: float | complex # sparse average of a along N_c
    rhs: float | complex # (1/N) sum c n^(1-1/c) a_n 1_{N_c}(n)

    @property
    def difference(self) -> float:
        return abs(self.lhs - self.rhs)

def reparam_check(a: Callable[[np.ndarray], np.ndarray], c: float, N: int,
                  sequence: PSSequence | None = None) -> ReparamResult:
    '''
    Compares the average of a along N_c with its density-reweighted
    average over [1, N]. `a` maps an integer array to values with |a| <= 1.
    '''
    sequence = sequence or PSSequence.build(c, N)
    m = sequence.members
    if m.size == 0:
        raise InvalidArgument(f"Empty sequence: c={c}, N={N}")
    values = np.asarray(a(m))
    if np.any(np.abs(values) > 1 + 1e-12):
        raise InvalidArgument("Invalid sequence rule: |a_n| > 1")
    lhs = np.mean(values)
    rhs = np.sum(c * m.astype(np.float64) ** (1.0 - 1.0 / c) * values) / N
    if np.iscomplexobj(values):
        return ReparamResult(lhs=complex(lhs), rhs=complex(rhs))
    return ReparamResult(lhs=float(lhs), rhs=float(rhs))
