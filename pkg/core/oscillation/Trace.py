from __future__ import annotations
from dataclasses import dataclass
import numpy as np

from lab.LabExceptions import InvalidArgument

VECTOR_DIM_CAP = 64

@dataclass(frozen=True)
class Trace:
    '''
    Values a_N along strictly increasing times N. Values are complex
    scalars, shape (M,), or small complex vectors, shape (M, d).
    '''
    times: np.ndarray  # int64, strictly increasing
    values: np.ndarray # complex128

    def __post_init__(self):
        times = np.asarray(self.times, dtype=np.int64).reshape(-1)
        values = np.asarray(self.values, dtype=np.complex128)
        if values.ndim not in (1, 2) or values.shape[0] != times.size:
            raise InvalidArgument(f"Invalid trace: {times.size} times for values of shape {values.shape}")
        if values.ndim == 2 and values.shape[1] > VECTOR_DIM_CAP:
            raise InvalidArgument(f"Invalid trace: dimension {values.shape[1]} exceeds {VECTOR_DIM_CAP}")
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise InvalidArgument("Invalid trace: times are not strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values, times=None) -> "Trace":
        values = np.asarray(values)
        if times is None:
            times = np.arange(1, values.shape[0] + 1)
        return cls(times=times, values=values)

    def __len__(self):
        return self.times.size

    @property
    def dimension(self) -> int:
        return 1 if self.values.ndim == 1 else self.values.shape[1]

    def component(self, j: int) -> "Trace":
        if self.values.ndim == 1:
            return self
        return Trace(times=self.times, values=self.values[:, j])

    def distances(self) -> np.ndarray:
        '''
        |a_{N_i} - a_{N_j}| for every pair, shape (M, M).
        '''
        v = self.values if self.values.ndim == 2 else self.values[:, None]
        diff = v[:, None, :] - v[None, :, :]
        return np.sqrt(np.sum(np.abs(diff) ** 2, axis=2))

    def row_distances(self, j: int) -> np.ndarray:
        '''
        |a_{N_j} - a_{N_i}| for i < j.
        '''
        if self.values.ndim == 1:
            return np.abs(self.values[j] - self.values[:j])
        return np.sqrt(np.sum(np.abs(self.values[j] - self.values[:j]) ** 2, axis=1))
