from __future__ import annotations
from dataclasses import dataclass
import numpy as np

from lab.LabExceptions import InvalidArgument

@dataclass(frozen=True)
class WeightSeries:
    '''
    A finite complex sequence on the half-open window [start, start + len).
    Indices outside the window read as zero.
    '''
    label: str         # name of the arithmetic function or derived series
    start: int         # index of values[0]
    values: np.ndarray # complex128, length >= 1

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128).reshape(-1)
        if values.size < 1:
            raise InvalidArgument(f"Invalid series {self.label}: empty window")
        if not np.all(np.isfinite(values)):
            raise InvalidArgument(f"Invalid series {self.label}: non-finite values")
        object.__setattr__(self, "start", int(self.start))
        object.__setattr__(self, "values", values)

    @classmethod
    def from_real(cls, label: str, start: int, values) -> "WeightSeries":
        return cls(label=label, start=start, values=np.asarray(values, dtype=np.float64))

    @classmethod
    def indicator(cls, lo: int, hi: int, label: str | None = None) -> "WeightSeries":
        '''
        Returns 1_[lo, hi).
        '''
        if hi <= lo:
            raise InvalidArgument(f"Invalid interval: [{lo}, {hi})")
        return cls(label=label or f"1[{lo},{hi})", start=lo, values=np.ones(hi - lo))

    @classmethod
    def point_mass(cls, n: int = 0, amplitude: complex = 1.0) -> "WeightSeries":
        return cls(label=f"delta{n}", start=n, values=np.array([amplitude]))

    @property
    def stop(self) -> int:
        return self.start + self.values.size

    def __len__(self):
        return self.values.size

    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.stop, dtype=np.int64)

    def at(self, n: int) -> complex:
        if self.start <= n < self.stop:
            return complex(self.values[n - self.start])
        return 0j

    def covers(self, lo: int, hi: int) -> bool:
        '''
        Returns True when [lo, hi) lies inside the window.
        '''
        return self.start <= lo and hi <= self.stop

    def window(self, lo: int, hi: int) -> np.ndarray:
        '''
        Returns the values on [lo, hi), zero-padded outside the window.
        '''
        out = np.zeros(max(hi - lo, 0), dtype=np.complex128)
        a, b = max(lo, self.start), min(hi, self.stop)
        if a < b:
            out[a - lo:b - lo] = self.values[a - self.start:b - self.start]
        return out

    def restrict(self, lo: int, hi: int) -> "WeightSeries":
        return WeightSeries(label=self.label, start=lo, values=self.window(lo, hi))

    def trimmed(self) -> "WeightSeries":
        '''
        Returns the series cut down to its nonzero support
        (a single zero if the series vanishes).
        '''
        nz = np.flatnonzero(self.values)
        if nz.size == 0:
            return WeightSeries(label=self.label, start=self.start, values=np.zeros(1))
        return WeightSeries(label=self.label, start=self.start + int(nz[0]),
                            values=self.values[nz[0]:nz[-1] + 1])

    def relabel(self, label: str, values=None) -> "WeightSeries":
        return WeightSeries(label=label, start=self.start,
                            values=self.values if values is None else values)

    def modulated(self, theta: float) -> "WeightSeries":
        '''
        Returns n -> e(theta n) f(n).
        '''
        phases = np.exp(2j * np.pi * ((theta * self.indices()) % 1.0))
        return self.relabel(f"e({theta}n){self.label}", self.values * phases)

    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2)))
