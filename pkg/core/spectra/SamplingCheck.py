from __future__ import annotations
from dataclasses import dataclass
import logging
import numpy as np
from scipy import fft
from scipy.signal import windows
from sortedcontainers import SortedList

from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument

logger = logging.getLogger("spectra")

SCAN_FACTOR = 8
TUKEY_TAPER = 0.25

@dataclass(frozen=True)
class SamplingResult:
    N: int
    delta: float
    frequencies: tuple[float, ...] # the selected 1/N-separated points

    @property
    def count(self) -> int:
        return len(self.frequencies)

    @property
    def bound_ratio(self) -> float:
        '''
        |Lambda| delta^2.
        '''
        return self.count * self.delta ** 2

def tukey_profile(N: int) -> np.ndarray:
    '''
    Tukey window on N points, normalized to unit sum.
    '''
    phi = windows.tukey(N, alpha=TUKEY_TAPER)
    return phi / np.sum(phi)

def sampling_check(g: WeightSeries, N: int, delta: float, phi: np.ndarray | None = None,
                   scan_factor: int = SCAN_FACTOR) -> SamplingResult:
    '''
    Greedily collects 1/N-separated theta with |P_N(theta)| >= delta, where
    P_N(theta) = sum_n phi_N(n) g(n) e(-n theta) over the first N points of g,
    scanning theta on a grid of spacing 1/(scan_factor N).
    '''
    if N < 1 or len(g) < N:
        raise InvalidArgument(f"Invalid sampling length: N={N} for a window of {len(g)}")
    if not 0 < delta <= 1:
        raise InvalidArgument(f"Invalid sampling level: delta={delta}")
    if np.max(np.abs(g.values[:N])) > 1 + 1e-12:
        raise InvalidArgument("Invalid sampling signal: not 1-bounded")
    phi = tukey_profile(N) if phi is None else np.asarray(phi, dtype=np.float64)
    if phi.size != N:
        raise InvalidArgument(f"Invalid profile length: {phi.size} != {N}")

    size = scan_factor * N
    spectrum = np.abs(fft.fft(phi * g.values[:N], size))
    # start offset only rotates phases
    candidates = np.flatnonzero(spectrum >= delta)
    order = candidates[np.argsort(-spectrum[candidates], kind="stable")]

    chosen = SortedList()
    for k in order:
        pos = chosen.bisect_left(k)
        neighbours = [chosen[pos % len(chosen)], chosen[pos - 1]] if chosen else []
        if all(min((k - c) % size, (c - k) % size) >= scan_factor for c in neighbours):
            chosen.add(int(k))

    result = SamplingResult(N=N, delta=delta, frequencies=tuple(k / size for k in chosen))
    logger.info(f"Sampling check. N: {N}. Delta: {delta}. Count: {result.count}.")
    return result
