from __future__ import annotations
from dataclasses import dataclass
import numpy as np

from core.sieve import FactorSieve
from lab.LabExceptions import GridParameterError

@dataclass(frozen=True, order=True)
class GridInterval:
    lo: int
    hi: int
    level: int = 0 # k in |I| = K0 2^k
    core_hi: int = 0

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def core(self) -> tuple[int, int]:
        return self.lo, self.core_hi

    def contains(self, other: "GridInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def disjoint(self, other: "GridInterval") -> bool:
        return self.hi <= other.lo or other.hi <= self.lo

    def smoothness(self, x: int) -> float:
        '''
        |I sym-diff (x + [0, |I|))| / |I|.
        '''
        return 2.0 * abs(x - self.lo) / self.length

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]

class ShiftedGrid:
    '''
    Intervals K0 2^k (n + L/Delta + [0, 1)) with k = U mod (Delta - 1),
    kept when they lie inside [lo, hi). Each carries its core, the
    leading 1/Delta of the interval.
    '''

    K0: int
    Delta: int
    L: int
    U: int
    window: tuple[int, int]

    def __init__(self, K0: int, Delta: int, L: int, U: int = 0, window: tuple[int, int] = (0, 1 << 12)):
        if Delta < 2 or not FactorSieve.shared(Delta).is_prime(Delta):
            raise GridParameterError(f"Invalid grid: Delta={Delta} is not prime")
        if K0 < 1 or K0 % Delta:
            raise GridParameterError(f"Invalid grid: Delta={Delta} does not divide K0={K0}")
        if not 1 <= L <= Delta:
            raise GridParameterError(f"Invalid grid: L={L} outside [1, {Delta}]")
        period = max(Delta - 1, 1)
        if not 0 <= U < period:
            raise GridParameterError(f"Invalid grid: U={U} outside [0, {period})")
        if (L * (2 ** (Delta - 1) - 1)) % Delta:
            raise GridParameterError(f"Invalid grid: Delta={Delta}, L={L} does not nest across levels")
        if window[1] <= window[0]:
            raise GridParameterError(f"Invalid grid window: {window}")
        self.K0, self.Delta, self.L, self.U = K0, Delta, L, U
        self.window = (int(window[0]), int(window[1]))

    def levels(self) -> list[int]:
        width = self.window[1] - self.window[0]
        out, k = [], self.U
        while self.K0 << k <= width:
            out.append(k)
            k += max(self.Delta - 1, 1)
        return out

    def intervals(self) -> list[GridInterval]:
        lo, hi = self.window
        out = []
        for k in self.levels():
            size = self.K0 << k
            shift = (self.K0 // self.Delta) * self.L << k
            core = size // self.Delta
            first = -(-(lo - shift) // size)
            last = (hi - shift) // size - 1
            starts = shift + size * np.arange(first, last + 1, dtype=np.int64)
            out.extend(GridInterval(int(s), int(s) + size, k, int(s) + core) for s in starts)
        return out

    @staticmethod
    def nesting_violations(intervals: list[GridInterval]) -> int:
        '''
        Pairs that overlap without nesting, found by a sweep over
        intervals sorted by (lo, -length).
        '''
        violations = 0
        stack: list[GridInterval] = []
        for cur in sorted(intervals, key=lambda I: (I.lo, -I.length)):
            while stack and stack[-1].hi <= cur.lo:
                stack.pop()
            if stack and cur.hi > stack[-1].hi:
                violations += 1
                continue
            stack.append(cur)
        return violations

    @staticmethod
    def nesting_violations_pairwise(intervals: list[GridInterval]) -> int:
        violations = 0
        for i, a in enumerate(intervals):
            for b in intervals[i + 1:]:
                if not (a.contains(b) or b.contains(a) or a.disjoint(b)):
                    violations += 1
        return violations
