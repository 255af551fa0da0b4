from __future__ import annotations
from dataclasses import dataclass
from math import exp, floor, gcd, log
import logging
import numpy as np

from .ArcModel import ArcModel
from .MajorArcWeight import MajorArcWeight, CUMULATIVE
from .PhaseTable import PhaseTable
from core.gowers import GowersNorm
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument, NotCoprimeError

logger = logging.getLogger("major_arc")

@dataclass(frozen=True)
class MomentResult:
    k: int
    value: float       # E_{n in window} |w(n)|^(2k)
    length: int
    full_period: bool  # window length is a multiple of the lcm

@dataclass(frozen=True)
class ResidualRow:
    M: int
    residual: float # ||w - w_{<=M}||_{U^s([N])}
    clamped: bool

class Admissibility:
    '''
    Finite-scale checks of the two admissibility clauses: upper
    normalization and Gowers-closeness to the major-arc model, plus
    coefficient recovery and the moment estimates behind them.
    '''

    @staticmethod
    def recover_coefficient(w: WeightSeries, a: int, q: int) -> complex:
        '''
        (1/N) sum_n w(n) e(-na/q) over the whole window of w.
        '''
        if q < 1 or gcd(a, q) != 1:
            raise NotCoprimeError(f"Invalid recovery fraction: {a}/{q}")
        phases = PhaseTable.rational(-a % q, q, w.indices())
        return complex(np.sum(w.values * phases) / len(w))

    @staticmethod
    def moment(w: WeightSeries, k: int, lcm: int) -> MomentResult:
        if k < 1:
            raise InvalidArgument(f"Invalid moment order: k={k}")
        full_period = len(w) % lcm == 0
        if not full_period:
            logger.warning(f"Moment window {len(w)} is not a multiple of lcm {lcm}.")
        value = float(np.mean(np.abs(w.values) ** (2 * k)))
        return MomentResult(k=k, value=value, length=len(w), full_period=full_period)

    @staticmethod
    def parseval_mass(weight: MajorArcWeight) -> float:
        '''
        sum |S(a/q)|^2 over the frequency set; the k = 1 moment over a full period.
        '''
        return float(sum(abs(v) ** 2 for v in weight.table.values()))

    @staticmethod
    def moment_constant(weight: MajorArcWeight, k: int, periods: int = 1) -> float:
        '''
        C = E|w_Q|^(2k) / (S_Q^(2k) Q^(2k) (log Q)^(4^k)) over whole periods.
        '''
        if weight.Q < 4:
            raise InvalidArgument(f"Moment shape needs Q >= 4: Q={weight.Q}")
        series = weight.weight_series(weight.lcm * periods)
        value = Admissibility.moment(series, k, weight.lcm).value
        s_q = weight.sup_coefficient()
        if s_q == 0:
            return 0.0
        return value / (s_q ** (2 * k) * weight.Q ** (2 * k) * log(weight.Q) ** (4 ** k))

    @staticmethod
    def upper_normalization(w: WeightSeries, lengths) -> float:
        '''
        max over L of (1/L) sum_{0 <= n < L} |w(n)|.
        '''
        best = 0.0
        for L in lengths:
            if L < 1:
                raise InvalidArgument(f"Invalid normalization length: L={L}")
            best = max(best, float(np.sum(np.abs(w.window(0, L)))) / L)
        return best

    @staticmethod
    def heath_brown_residual(w: WeightSeries, model: ArcModel, truncations, s: int, N: int,
                             norm: GowersNorm | None = None) -> list[ResidualRow]:
        '''
        ||w - w_{<=M}||_{U^s([N])} for each truncation M, with w read on [1, N].
        '''
        norm = norm or GowersNorm()
        base = w.window(1, N + 1)
        rows = []
        for M in truncations:
            approx = MajorArcWeight(model, M, mode=CUMULATIVE).weight_series(N, start=1)
            diff = WeightSeries(label=f"{w.label}-w[<={M}]", start=1, values=base - approx.values)
            result = norm.normalized(diff, s, N)
            logger.info(f"Residual U^{s}. M: {M}. N: {N}. Value: {result.normalized}.")
            rows.append(ResidualRow(M=M, residual=result.normalized, clamped=result.clamped))
        return rows

    @staticmethod
    def default_truncation(N: int) -> int:
        '''
        Q(N) = floor(exp((log N)^(1/8))).
        '''
        if N < 2:
            return 1
        return max(1, floor(exp(log(N) ** 0.125)))
