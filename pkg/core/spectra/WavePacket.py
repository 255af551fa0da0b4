from __future__ import annotations
from dataclasses import dataclass
import logging
import numpy as np

from .LocalFourier import local_fourier
from core.major_arc import PhaseTable
from core.parallel import WorkerPool
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument, ScaleSpacingError

logger = logging.getLogger("spectra")

ANNULUS_FACTOR = 10 # Lambda_M keeps 0 < dist(theta, Lambda) <= 10 R / M

@dataclass(frozen=True)
class WavePacket:
    '''
    eta_{I,xi}(n) = |I|^(-1/2) 1_I(n) e(xi n / |I|).
    '''
    lo: int
    hi: int
    xi: int

    def series(self) -> WeightSeries:
        size = self.hi - self.lo
        n = np.arange(self.lo, self.hi, dtype=np.int64)
        return WeightSeries(label=f"eta[{self.lo},{self.hi}),{self.xi}", start=self.lo,
                            values=PhaseTable.rational(self.xi % size, size, n) / np.sqrt(size))

    def inner(self, g: WeightSeries) -> complex:
        '''
        <g, eta> = sum g(n) conj eta(n).
        '''
        return complex(np.sum(g.window(self.lo, self.hi) * np.conj(self.series().values)))

def annulus(frequencies, M0: int, M: int, R: int) -> np.ndarray:
    '''
    Lambda_M as integers xi mod M: 0 < dist(xi/M, Lambda) <= 10R/M, with
    Lambda given as integers mod M0.
    '''
    if M % M0:
        raise ScaleSpacingError(f"Invalid scale: M={M} is not a multiple of M0={M0}")
    centres = (np.asarray(sorted(set(int(x) % M0 for x in frequencies)), dtype=np.int64) * (M // M0)) % M
    xi = np.arange(M, dtype=np.int64)
    if centres.size == 0:
        return xi[:0]
    gap = np.abs(xi[:, None] - centres[None, :]) % M
    dist = np.minimum(gap, M - gap).min(axis=1)
    return xi[(dist > 0) & (dist <= ANNULUS_FACTOR * R)]

def check_scales(scales, M0: int, R: int) -> list[int]:
    scales = sorted(int(M) for M in scales)
    if not scales:
        raise ScaleSpacingError("Invalid scale list: empty")
    for M in scales:
        if M % M0 or M < (M0 << R):
            raise ScaleSpacingError(f"Invalid scale: M={M} must be a multiple of M0={M0} and >= 2^{R} M0")
    for small, large in zip(scales, scales[1:]):
        if large < small << R:
            raise ScaleSpacingError(f"Invalid scales: {small} and {large} are closer than 2^{R}")
    return scales

@dataclass(frozen=True)
class EnergyResult:
    total: float
    ratio: float     # total / (R ||g||^2)
    per_scale: tuple[float, ...]

def wavepacket_energy(g: WeightSeries, frequencies, M0: int, R: int, scales,
                      window: tuple[int, int] | None = None, pool: WorkerPool | None = None) -> EnergyResult:
    '''
    sum over scales M, intervals |I| = M tiling the window, and xi in
    Lambda_M of |<g, eta_{I,xi}>|^2.
    '''
    if R < 1 or M0 < 1:
        raise InvalidArgument(f"Invalid packet parameters: M0={M0}, R={R}")
    scales = check_scales(scales, M0, R)
    lo, hi = window or (g.start, g.stop)
    padded = WeightSeries(label=g.label, start=lo, values=g.window(lo, hi)) if hi > lo else None
    pool = pool or WorkerPool.default()

    def scale_energy(M: int) -> float:
        if padded is None:
            return 0.0
        xi = annulus(frequencies, M0, M, R)
        first = -(-lo // M) * M
        energy = 0.0
        for start in range(first, hi - M + 1, M):
            coefficients = local_fourier(padded, (start, start + M))
            energy += float(np.sum(np.abs(coefficients[xi]) ** 2)) / M
        return energy

    per_scale = tuple(pool.map(scale_energy, scales))
    total = float(sum(per_scale))
    norm = g.l2_norm() ** 2
    ratio = total / (R * norm) if norm > 0 else 0.0
    logger.info(f"Wave packet energy. Scales: {scales}. Total: {total}. Ratio: {ratio}.")
    return EnergyResult(total=total, ratio=ratio, per_scale=per_scale)
