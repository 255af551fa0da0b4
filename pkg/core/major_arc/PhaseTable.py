from functools import lru_cache
import numpy as np

RENORM_STEPS = 1 << 16

class PhaseTable:
    '''
    Unit phases e(theta k) by complex-rotation recurrence.

    The recurrence is re-anchored on the exact phase every 2^16 steps,
    which keeps the drift below 1e-10.
    '''

    @staticmethod
    def rotation(theta: float, count: int, start: int = 0) -> np.ndarray:
        '''
        Returns e(theta (start + k)) for k = 0, ..., count-1.
        '''
        out = np.empty(count, dtype=np.complex128)
        step = np.exp(2j * np.pi * theta)
        for lo in range(0, count, RENORM_STEPS):
            hi = min(lo + RENORM_STEPS, count)
            anchor = np.exp(2j * np.pi * ((theta * (start + lo)) % 1.0))
            block = np.full(hi - lo, step)
            block[0] = anchor
            out[lo:hi] = np.cumprod(block)
        return out

    @staticmethod
    @lru_cache(maxsize=1024)
    def roots(q: int) -> np.ndarray:
        '''
        Returns e(r/q) for r = 0, ..., q-1.
        '''
        table = PhaseTable.rotation(1.0 / q, q)
        table.flags.writeable = False
        return table

    @staticmethod
    def rational(a: int, q: int, n: np.ndarray) -> np.ndarray:
        '''
        Returns e(a n / q) by exact residue lookup.
        '''
        return PhaseTable.roots(q)[(np.asarray(n, dtype=np.int64) * a) % q]
