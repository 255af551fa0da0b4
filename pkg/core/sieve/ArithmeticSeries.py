from math import isqrt
import numpy as np

from .WeightSeries import WeightSeries
from lab.LabExceptions import InvalidArgument

class ArithmeticSeries:
    '''
    Sieve-free arithmetic functions: the divisor function by
    harmonic sweep and r_2 by lattice sweep.
    '''

    @staticmethod
    def divisor_series(N: int) -> WeightSeries:
        '''
        Returns tau on [1, N].
        '''
        if N < 1:
            raise InvalidArgument(f"Invalid range: N={N}")
        tau = np.zeros(N + 1, dtype=np.int64)
        for d in range(1, N + 1):
            tau[d::d] += 1
        return WeightSeries.from_real("tau", 1, tau[1:])

    @staticmethod
    def two_squares_series(N: int) -> WeightSeries:
        '''
        Returns r_2 on [0, N]: ordered pairs (a, b), signs included,
        with a^2 + b^2 = n.
        '''
        if N < 0:
            raise InvalidArgument(f"Invalid range: N={N}")
        chunks, weights = [], []
        for a in range(isqrt(N) + 1):
            bmax = isqrt(N - a * a)
            b = np.arange(-bmax, bmax + 1, dtype=np.int64)
            chunks.append(a * a + b * b)
            weights.append(np.full(b.size, 1 if a == 0 else 2, dtype=np.int64))
        counts = np.bincount(np.concatenate(chunks), weights=np.concatenate(weights), minlength=N + 1)
        return WeightSeries.from_real("r2", 0, np.rint(counts))

    @staticmethod
    def two_squares_weight(N: int) -> WeightSeries:
        '''
        Returns the normalized weight r_2/pi on [1, N].
        '''
        r2 = ArithmeticSeries.two_squares_series(N)
        return WeightSeries.from_real("r2/pi", 1, r2.values.real[1:] / np.pi)

    @staticmethod
    def truncated_divisor_count(n: int, Q: int) -> int:
        '''
        Returns tau(n; Q), the number of divisors d <= Q of n.
        '''
        return sum(1 for d in range(1, min(n, Q) + 1) if n % d == 0)
