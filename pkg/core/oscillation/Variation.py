from __future__ import annotations
import logging
import numpy as np

from .Trace import Trace
from lab.LabExceptions import InvalidArgument, TraceLengthExceeded

logger = logging.getLogger("oscillation")

TRACE_CAP = 5000
JUMP_SUP_CAP = 200

#
# Vectorized programs: rows are times, columns independent traces
#

def variation_power_many(values: np.ndarray, r: float) -> np.ndarray:
    '''
    sup over increasing subsequences of sum |a_{N_i} - a_{N_{i+1}}|^r,
    one column per trace. values has shape (M, X).
    '''
    M = values.shape[0]
    best = np.zeros_like(values, dtype=np.float64)
    for j in range(1, M):
        steps = best[:j] + np.abs(values[j] - values[:j]) ** r
        best[j] = np.maximum(steps.max(axis=0), 0.0)
    return best.max(axis=0)

def jump_count_many(values: np.ndarray, lam: float | np.ndarray) -> np.ndarray:
    '''
    Longest chain with consecutive moves >= lam, one column per trace.
    lam is a scalar or one jump size per column.
    '''
    M = values.shape[0]
    chain = np.zeros(values.shape, dtype=np.int64)
    for j in range(1, M):
        reach = np.abs(values[j] - values[:j]) >= lam
        chain[j] = np.max(np.where(reach, chain[:j] + 1, 0), axis=0)
    return chain.max(axis=0)

def jump_sup_many(values: np.ndarray) -> float:
    '''
    sup over lam > 0 of lam (sum_x N_lam(x))^(1/2), one column per trace.
    Each column's count only drops just past one of its own pairwise
    distances, so the sup is attained on the union of those distances.
    '''
    M, X = values.shape
    if M < 2:
        return 0.0
    i, j = np.triu_indices(M, k=1)
    critical = np.abs(values[j] - values[i])
    counts = np.stack([jump_count_many(values, lam) for lam in critical])

    # per column, N_lam is the count at the smallest critical value >= lam
    order = np.argsort(critical, axis=0, kind="stable")
    c = np.take_along_axis(critical, order, axis=0)
    n = np.take_along_axis(counts, order, axis=0)
    drops = n - np.vstack([n[1:], np.zeros((1, X), dtype=n.dtype)])

    flat = np.argsort(c, axis=None, kind="stable")
    c_sorted, d_sorted = c.reshape(-1)[flat], drops.reshape(-1)[flat]
    suffix = np.cumsum(d_sorted[::-1])[::-1]
    totals = suffix[np.searchsorted(c_sorted, c_sorted, side="left")]
    keep = c_sorted > 0
    return float(np.max(c_sorted[keep] * np.sqrt(totals[keep]), initial=0.0))

#
# Single traces
#

def _check_length(trace: Trace, cap: int) -> None:
    if len(trace) > cap:
        logger.error(f"Trace length {len(trace)} exceeds cap {cap}.")
        raise TraceLengthExceeded(length=len(trace), cap=cap)

def variation(trace: Trace, r: float, cap: int = TRACE_CAP) -> float:
    '''
    r-variation V^r of a trace, exact by dynamic programming.
    '''
    if r < 1:
        raise InvalidArgument(f"Invalid variation exponent: r={r}")
    _check_length(trace, cap)
    if len(trace) < 2:
        return 0.0
    best = np.zeros(len(trace))
    for j in range(1, len(trace)):
        best[j] = max(0.0, float(np.max(best[:j] + trace.row_distances(j) ** r)))
    return float(best.max() ** (1.0 / r))

def jump_count(trace: Trace, lam: float, cap: int = TRACE_CAP) -> int:
    '''
    N_lam: the largest K with N_0 < ... < N_K and every |a_{N_i} - a_{N_{i-1}}| >= lam.
    '''
    if lam <= 0:
        raise InvalidArgument(f"Invalid jump size: lambda={lam}")
    _check_length(trace, cap)
    chain = np.zeros(len(trace), dtype=np.int64)
    for j in range(1, len(trace)):
        reach = trace.row_distances(j) >= lam
        if np.any(reach):
            chain[j] = int(np.max(chain[:j][reach])) + 1
    return int(chain.max()) if len(trace) else 0

def _jump_count(dist: np.ndarray, lam: float) -> int:
    M = dist.shape[0]
    chain = np.zeros(M, dtype=np.int64)
    for j in range(1, M):
        reach = dist[j, :j] >= lam
        if np.any(reach):
            chain[j] = int(np.max(chain[:j][reach])) + 1
    return int(chain.max()) if M else 0

def jump_sup(trace: Trace, r: float, cap: int = JUMP_SUP_CAP) -> float:
    '''
    sup over lam > 0 of lam^r N_lam. N_lam only drops just past a pairwise
    distance, so the sup is attained on those distances.
    '''
    _check_length(trace, cap)
    dist = trace.distances()
    critical = np.unique(dist[np.triu_indices(len(trace), k=1)])
    critical = critical[critical > 0]
    return max((float(lam) ** r * _jump_count(dist, float(lam)) for lam in critical), default=0.0)

def lacunary_lipschitz(trace: Trace) -> float:
    '''
    max |a_N - a_M| N / (N - M) over consecutive times with N/2 <= M < N.
    '''
    best = 0.0
    for j in range(1, len(trace)):
        M, N = int(trace.times[j - 1]), int(trace.times[j])
        if 2 * M >= N:
            step = float(np.sqrt(np.sum(np.abs(np.atleast_1d(trace.values[j] - trace.values[j - 1])) ** 2)))
            best = max(best, step * N / (N - M))
    return best
