from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from scipy import fft

from core.major_arc import PhaseTable
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument, WindowCoverageError

SPECTRUM_RTOL = 1e-12

def _bounds(interval) -> tuple[int, int]:
    if hasattr(interval, "lo"):
        return interval.lo, interval.hi
    lo, hi = interval
    return int(lo), int(hi)

def local_fourier(g: WeightSeries, interval) -> np.ndarray:
    '''
    F_I g(xi) = sum_{n in I} g(n) e(-n xi / |I|) for xi in Z/|I|, with n
    the absolute index.
    '''
    lo, hi = _bounds(interval)
    if hi <= lo:
        raise InvalidArgument(f"Invalid interval: [{lo}, {hi})")
    if not g.covers(lo, hi):
        raise WindowCoverageError(f"Series window [{g.start}, {g.stop}) does not cover [{lo}, {hi})")
    size = hi - lo
    xi = np.arange(size, dtype=np.int64)
    return PhaseTable.rational(-lo % size, size, xi) * fft.fft(g.window(lo, hi))

def local_inverse(coefficients: np.ndarray, interval, label: str = "g") -> WeightSeries:
    lo, hi = _bounds(interval)
    size = hi - lo
    xi = np.arange(size, dtype=np.int64)
    values = fft.ifft(coefficients * PhaseTable.rational(lo % size, size, xi))
    return WeightSeries(label=label, start=lo, values=values)

@dataclass(frozen=True)
class SpectrumSet:
    '''
    Spec_delta(I): xi with delta/2 < |E_{n in I} g(n) e(-n xi/|I|)| <= delta.
    '''
    interval: tuple[int, int]
    delta: float
    frequencies: tuple[int, ...]

    def __len__(self):
        return len(self.frequencies)

    def __contains__(self, xi: int):
        return xi % (self.interval[1] - self.interval[0]) in self.frequencies

    def as_dict(self) -> dict:
        return {"interval": list(self.interval), "delta": self.delta, "freqs": list(self.frequencies)}

def spec_delta(g: WeightSeries, interval, delta: float, coefficients: np.ndarray | None = None) -> SpectrumSet:
    if not 0 < delta <= 1:
        raise InvalidArgument(f"Invalid spectrum level: delta={delta}")
    lo, hi = _bounds(interval)
    if coefficients is None:
        coefficients = local_fourier(g, (lo, hi))
    mags = np.abs(coefficients) / (hi - lo)
    scale = 1.0 + SPECTRUM_RTOL
    picked = np.flatnonzero((mags > delta / 2 * scale) & (mags <= delta * scale))
    return SpectrumSet(interval=(lo, hi), delta=delta, frequencies=tuple(int(x) for x in picked))

def spectrum_layers(g: WeightSeries, interval, delta0: float, levels: int) -> list[SpectrumSet]:
    '''
    Spec_delta(I) for delta = delta0 2^-j, j < levels, from one transform.
    '''
    coefficients = local_fourier(g, interval)
    return [spec_delta(g, interval, delta0 * 2.0 ** (-j), coefficients) for j in range(levels)]
