import numpy as np

from core.arcs import ExponentialSums
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument

class TwoSquaresSplit:
    '''
    Splits the r_2/pi major arcs by denominator class.

    Odd q carry (-1)^((q-1)/2)/q c_q(n). q = 0 mod 4 carry
    -(2i/q) sum_a (-1)^((a-1)/2) e(na/q), where the signed unit
    sum equals -i c_q(n + q/4). q = 2 mod 4 vanish.
    '''

    @staticmethod
    def odd_part(Q: int, n: np.ndarray) -> np.ndarray:
        out = np.zeros(n.size, dtype=np.complex128)
        for q in range(1, Q + 1, 2):
            sign = (-1) ** ((q - 1) // 2)
            out += sign / q * ExponentialSums.ramanujan_table(q)[n % q]
        return out

    @staticmethod
    def even_part(Q: int, n: np.ndarray) -> np.ndarray:
        out = np.zeros(n.size, dtype=np.complex128)
        for q in range(4, Q + 1, 4):
            signed_unit_sum = -1j * ExponentialSums.ramanujan_table(q)[(n + q // 4) % q]
            out += -2j / q * signed_unit_sum
        return out

    @staticmethod
    def r2_arc_split(Q: int, N: int, start: int = 1) -> tuple[WeightSeries, WeightSeries]:
        '''
        Returns (w_{<=Q;1}, w_{<=Q;2}) on [start, start + N).
        '''
        if Q < 1 or N < 1:
            raise InvalidArgument(f"Invalid split parameters: Q={Q}, N={N}")
        n = np.arange(start, start + N, dtype=np.int64)
        return (WeightSeries(label=f"w[<={Q};1]", start=start, values=TwoSquaresSplit.odd_part(Q, n)),
                WeightSeries(label=f"w[<={Q};2]", start=start, values=TwoSquaresSplit.even_part(Q, n)))
