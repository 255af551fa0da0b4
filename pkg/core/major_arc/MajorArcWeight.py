from __future__ import annotations
from itertools import groupby
import logging
import numpy as np
from sortedcontainers import SortedDict

from .ArcModel import ArcModel
from .PhaseTable import PhaseTable
from core.arcs import FareySlice, DyadicFareySlice, ReducedFraction
from core.arcs.FareySlice import DEFAULT_DIGIT_CAP
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument

logger = logging.getLogger("major_arc")

SLICE = "slice"
CUMULATIVE = "cumulative"
DYADIC = "dyadic"

class MajorArcWeight:
    '''
    Major-arc approximant w(n) = sum S(a/q) e(na/q) over a Farey slice.

    Modes: single slice Gamma_Q, cumulative (every q <= Q), or dyadic
    slice Gamma_Q^(i). The coefficient table is fixed at construction
    and iterated in canonical (q, a) order.
    '''

    model: ArcModel
    Q: int
    mode: str
    i: int | None
    frequencies: FareySlice
    table: SortedDict # ReducedFraction -> S(a/q)

    def __init__(self, model: ArcModel, Q: int, mode: str = SLICE, i: int | None = None,
                 digit_cap: int = DEFAULT_DIGIT_CAP):
        self.model = model
        self.Q = Q
        self.mode = mode
        self.i = i

        if mode == SLICE:
            self.frequencies = FareySlice.build(Q, digit_cap)
        elif mode == CUMULATIVE:
            self.frequencies = FareySlice.cumulative(Q, digit_cap)
        elif mode == DYADIC:
            self.frequencies = DyadicFareySlice.build(Q, i or 0, digit_cap)
        else:
            raise InvalidArgument(f"Invalid major arc mode: {mode}")

        self.table = SortedDict()
        for frac in self.frequencies:
            self.table[frac] = model.coefficient(frac.a, frac.q)

    @property
    def lcm(self) -> int:
        return self.frequencies.lcm

    def coefficient(self, frac: ReducedFraction) -> complex:
        return self.table.get(frac, 0j)

    def sup_coefficient(self) -> float:
        '''
        S_Q = max |S(a/q)| over the frequency set.
        '''
        return max((abs(v) for v in self.table.values()), default=0.0)

    def residue_table(self, q: int) -> np.ndarray:
        '''
        Returns sum_a S(a/q) e(ra/q) for r = 0, ..., q-1 (denominator q only).
        '''
        fracs = [f for f in self.table if f.q == q]
        if not fracs:
            return np.zeros(q, dtype=np.complex128)
        a = np.array([f.a for f in fracs], dtype=np.int64)
        coeffs = np.array([self.table[f] for f in fracs], dtype=np.complex128)
        r = np.arange(q, dtype=np.int64)
        return PhaseTable.roots(q)[(r[:, None] * a[None, :]) % q] @ coeffs

    def weight_series(self, N: int, start: int = 1) -> WeightSeries:
        '''
        Returns w on [start, start + N).
        '''
        if N < 1:
            raise InvalidArgument(f"Invalid range: N={N}")
        n = np.arange(start, start + N, dtype=np.int64)
        w = np.zeros(N, dtype=np.complex128)
        for q, _ in groupby(self.table.keys(), key=lambda f: f.q):
            w += self.residue_table(q)[n % q]
        return WeightSeries(label=f"w[{self.model.label()},Q={self.Q},{self.mode}]", start=start, values=w)

    def records(self) -> list[dict]:
        return [{"a": f.a, "q": f.q, "re": v.real, "im": v.imag} for f, v in self.table.items()]
