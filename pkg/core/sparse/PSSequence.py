from __future__ import annotations
from dataclasses import dataclass
import logging
import numpy as np
from mpmath import mp

from lab.LabExceptions import InvalidArgument

logger = logging.getLogger("sparse")

UPPER_EXPONENT = 7.0 / 6.0
BOUNDARY_TOL = 1e-6 # |k^c - round(k^c)| below which the float floor is re-checked
CHECK_DPS = 50
INTEGER_TOL = 40 # decimal digits: a power this close to an integer is that integer

def _exact_floor(k: int, exponent) -> int:
    power = mp.mpf(k) ** exponent
    nearest = mp.nint(power)
    if abs(power - nearest) < mp.mpf(10) ** (-INTEGER_TOL):
        return int(nearest)
    return int(mp.floor(power))

@dataclass(frozen=True)
class PSSequence:
    '''
    The Piatetski-Shapiro set N_c = {floor(k^c)} cut at N.

    members[j] = floor(preimages[j]^c), verified in high precision
    wherever k^c lies close to an integer.
    '''
    c: float
    N: int
    members: np.ndarray   # int64, strictly increasing for c > 1
    preimages: np.ndarray # int64 k with floor(k^c) = members

    @classmethod
    def build(cls, c: float, N: int) -> "PSSequence":
        if c < 1:
            raise InvalidArgument(f"Invalid exponent: c={c}")
        if N < 1:
            raise InvalidArgument(f"Invalid limit: N={N}")
        if c >= UPPER_EXPONENT:
            logger.warning(f"Exponent c={c} is outside [1, 7/6).")

        k_max = int(N ** (1.0 / c)) + 2
        k = np.arange(1, k_max + 1, dtype=np.int64)
        if float(c).is_integer():
            m = k ** int(c)
        else:
            powers = k.astype(np.float64) ** c
            m = np.floor(powers).astype(np.int64)
            near = np.flatnonzero(np.abs(powers - np.rint(powers)) < BOUNDARY_TOL)
            corrections = 0
            with mp.workdps(CHECK_DPS):
                exponent = mp.mpf(c)
                for j in near:
                    exact = _exact_floor(int(k[j]), exponent)
                    if exact != m[j]:
                        corrections += 1
                        m[j] = exact
            if corrections:
                logger.warning(f"Floor corrections in N_c. c: {c}. N: {N}. Count: {corrections}.")

        keep = m <= N
        return cls(c=c, N=N, members=m[keep], preimages=k[keep])

    def __len__(self):
        return self.members.size

    def indicator(self, lo: int, hi: int) -> np.ndarray:
        '''
        Boolean mask of N_c on [lo, hi).
        '''
        mask = np.zeros(max(hi - lo, 0), dtype=bool)
        inside = self.members[(self.members >= lo) & (self.members < hi)]
        mask[inside - lo] = True
        return mask

    def count_upto(self, M: int) -> int:
        return int(np.searchsorted(self.members, M, side="right"))

    def predicted_count(self, M: int | None = None) -> float:
        return float((self.N if M is None else M) ** (1.0 / self.c))

    def verify_floors(self, sample: int | None = None) -> bool:
        '''
        Checks m <= k^c < m + 1 in high precision, on every member or
        on the first `sample` of them.
        '''
        count = self.members.size if sample is None else min(sample, self.members.size)
        with mp.workdps(CHECK_DPS):
            exponent = mp.mpf(self.c)
            for m, k in zip(self.members[:count], self.preimages[:count]):
                if _exact_floor(int(k), exponent) != int(m):
                    return False
        return True

    def count_table(self, limits) -> list[dict]:
        '''
        |N_c cap [1, M]| against M^(1/c) for each M <= N.
        '''
        rows = []
        for M in limits:
            if M > self.N:
                raise InvalidArgument(f"Invalid count limit: {M} > {self.N}")
            count = self.count_upto(M)
            predicted = self.predicted_count(M)
            rows.append({"N": int(M), "count": count, "predicted": predicted,
                         "deviation": count - int(np.floor(predicted))})
        return rows

def sparse_count_table(c: float, limits) -> list[dict]:
    limits = list(limits)
    return PSSequence.build(c, max(limits)).count_table(limits)
