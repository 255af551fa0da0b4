from __future__ import annotations
from math import log
import numpy as np

from .ArcModel import EULER_GAMMA, divisor_coefficient
from core.arcs import ExponentialSums, mobius
from core.sieve import ArithmeticSeries, WeightSeries
from lab.LabExceptions import InvalidArgument

class DivisorArcs:
    '''
    Exact identities of the divisor-function major arcs.

    tau_{<=Q;N}(n) = sum_{q<=Q} S_tau(1/q;N) c_q(n) and
    tau_{<=Q}(n)   = sum_{q<=Q} (1/q) c_q(n).
    '''

    @staticmethod
    def _as_array(n) -> np.ndarray:
        return np.atleast_1d(np.asarray(n, dtype=np.int64))

    @staticmethod
    def ramanujan_form(n, Q: int, N: float) -> np.ndarray:
        '''
        tau_{<=Q;N}(n) through Ramanujan sums.
        '''
        n = DivisorArcs._as_array(n)
        out = np.zeros(n.size, dtype=np.float64)
        for q in range(1, Q + 1):
            out += divisor_coefficient(q, N) * ExponentialSums.ramanujan_table(q)[n % q]
        return out

    @staticmethod
    def log_scale_form(n, Q: int) -> np.ndarray:
        '''
        tau_{<=Q}(n) = sum_{q<=Q} (1/q) c_q(n).
        '''
        n = DivisorArcs._as_array(n)
        out = np.zeros(n.size, dtype=np.float64)
        for q in range(1, Q + 1):
            out += ExponentialSums.ramanujan_table(q)[n % q] / q
        return out

    @staticmethod
    def type1_coefficients(Q: int, N: float) -> np.ndarray:
        '''
        alpha_d = d sum_{u <= Q/d} S_tau(1/(ud); N) mu(u) for d = 1..Q (index 0 unused).
        '''
        alpha = np.zeros(Q + 1, dtype=np.float64)
        for d in range(1, Q + 1):
            alpha[d] = d * sum(divisor_coefficient(u * d, N) * mobius(u) for u in range(1, Q // d + 1))
        return alpha

    @staticmethod
    def tau_type1(n, Q: int, N: float) -> np.ndarray:
        '''
        tau_{<=Q;N}(n) = sum_{d | n, d <= Q} alpha_d.
        '''
        if Q > N ** (2.0 / 3.0):
            raise InvalidArgument(f"Invalid type-I range: Q={Q} exceeds N^(2/3) for N={N}")
        n = DivisorArcs._as_array(n)
        alpha = DivisorArcs.type1_coefficients(Q, N)
        out = np.zeros(n.size, dtype=np.float64)
        for d in range(1, Q + 1):
            out += np.where(n % d == 0, alpha[d], 0.0)
        return out

    @staticmethod
    def tau_discrepancy(N: int, Q: int) -> float:
        '''
        (1/(N log N)) sum_{n<=N} |tau_{<=Q;N}(n) - log N tau_{<=Q}(n)|.
        '''
        if N < 3 or Q < 1:
            raise InvalidArgument(f"Invalid discrepancy parameters: N={N}, Q={Q}")
        n = np.arange(1, N + 1, dtype=np.int64)
        gap = DivisorArcs.ramanujan_form(n, Q, N) - log(N) * DivisorArcs.log_scale_form(n, Q)
        return float(np.sum(np.abs(gap)) / (N * log(N)))

    @staticmethod
    def tau_pointwise_check(N: int, Q: int, n_max: int) -> float:
        '''
        Returns the measured C in
        |tau_{<=Q;N}(n) - log N tau_{<=Q}(n)| <= C tau(n;Q) log^2 Q over n <= n_max.
        '''
        if Q < 2:
            raise InvalidArgument(f"Invalid pointwise check: Q={Q}")
        n = np.arange(1, n_max + 1, dtype=np.int64)
        gap = np.abs(DivisorArcs.ramanujan_form(n, Q, N) - log(N) * DivisorArcs.log_scale_form(n, Q))
        truncated = np.zeros(n.size, dtype=np.float64)
        for d in range(1, Q + 1):
            truncated += (n % d == 0)
        return float(np.max(gap / (truncated * log(Q) ** 2)))

    @staticmethod
    def voronoi_main(N: float, a: int, q: int) -> float:
        '''
        (N/q) sum_{d|q} (c_d(a)/d)(log N + 2 gamma - 1 - 2 log d).
        '''
        total = 0.0
        for d in range(1, q + 1):
            if q % d == 0:
                total += ExponentialSums.ramanujan_sum(d, a) / d * (log(N) + 2 * EULER_GAMMA - 1 - 2 * log(d))
        return N / q * total

    @staticmethod
    def ap_divisor_sum(N: int, a: int, q: int, tau: WeightSeries | None = None) -> tuple[float, float]:
        '''
        Returns (sum_{n<=N, n=a mod q} tau(n), Voronoi main term).
        '''
        if not (1 <= a <= q and q ** 3 <= N):
            raise InvalidArgument(f"Invalid progression: a={a}, q={q}, N={N}")
        if tau is None or tau.start != 1 or len(tau) < N:
            tau = ArithmeticSeries.divisor_series(N)
        values = tau.values.real[:N]
        exact = float(np.sum(values[a - 1::q]))
        return exact, DivisorArcs.voronoi_main(N, a, q)
