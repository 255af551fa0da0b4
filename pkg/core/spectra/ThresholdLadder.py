from __future__ import annotations
from dataclasses import dataclass
import numpy as np

from lab.LabExceptions import InvalidArgument

def psi(t) -> np.ndarray:
    '''
    cos^2((pi/2) log2 t) on (1/2, 2), zero elsewhere. Dyadic dilates
    sum to one on (0, inf).
    '''
    t = np.asarray(t, dtype=np.float64)
    flat = np.atleast_1d(t)
    out = np.zeros_like(flat)
    inside = (flat > 0.5) & (flat < 2.0)
    out[inside] = np.cos(0.5 * np.pi * np.log2(flat[inside])) ** 2
    return out.reshape(t.shape)

@dataclass(frozen=True)
class ThresholdLadder:
    '''
    Soft thresholds Psi_delta(z) = z psi(|z|/delta) on the dyadic levels
    delta = delta0 2^-j, j = 0, ..., levels - 1.
    '''
    delta0: float = 1.0
    levels: int = 40

    def __post_init__(self):
        if self.delta0 <= 0 or self.levels < 1:
            raise InvalidArgument(f"Invalid ladder: delta0={self.delta0}, levels={self.levels}")

    def deltas(self) -> np.ndarray:
        return self.delta0 * 2.0 ** (-np.arange(self.levels))

    def psi_delta(self, t, delta: float) -> np.ndarray:
        return psi(np.asarray(t, dtype=np.float64) / delta)

    def Psi(self, z, delta: float) -> np.ndarray:
        z = np.asarray(z, dtype=np.complex128)
        return z * self.psi_delta(np.abs(z), delta)

    def partition(self, t) -> np.ndarray:
        '''
        sum over ladder levels of psi_delta(t).
        '''
        t = np.asarray(t, dtype=np.float64)
        return sum(self.psi_delta(t, d) for d in self.deltas())

    def Psi_total(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=np.complex128)
        return z * self.partition(np.abs(z))

    def smallest(self) -> float:
        '''
        Below this level the truncated ladder no longer sums to one.
        '''
        return float(self.deltas()[-1])

    def partition_error(self, points: int = 10_000) -> float:
        '''
        max |sum psi_delta(t) - 1| on a grid of (smallest level, delta0].
        '''
        t = np.linspace(self.smallest(), self.delta0, points)
        return float(np.max(np.abs(self.partition(t) - 1.0)))

    def lipschitz(self, delta: float, points: int = 10_000) -> float:
        '''
        Measured Lipschitz constant of Psi_delta: the larger of sup psi_delta
        (tangential) and sup |d/dt (t psi_delta(t))| (radial).
        '''
        t = np.linspace(delta / 2, 2 * delta, points)
        radial = np.abs(np.gradient(t * self.psi_delta(t, delta), t))
        return float(max(np.max(self.psi_delta(t, delta)), np.max(radial)))

    @staticmethod
    def lipschitz_bound() -> float:
        return 1.0 + np.pi / (2.0 * np.log(2.0))
