from __future__ import annotations
from dataclasses import dataclass
import numpy as np

from .DynamicalSystem import character as torus_character

@dataclass(frozen=True)
class Observable:
    '''
    Trigonometric polynomial sum c e(kx x + ky y) on T or T^2.
    '''
    terms: tuple[tuple[int, int, complex], ...] # (kx, ky, amplitude)

    @classmethod
    def constant(cls, value: complex = 1.0) -> "Observable":
        return cls(((0, 0, complex(value)),))

    @classmethod
    def character(cls, kx: int, ky: int = 0, amplitude: complex = 1.0) -> "Observable":
        return cls(((kx, ky, complex(amplitude)),))

    def __add__(self, other: "Observable") -> "Observable":
        return Observable(self.terms + other.terms)

    @property
    def l1_norm(self) -> float:
        '''
        sum |c|, a bound for the sup norm.
        '''
        return float(sum(abs(c) for _, _, c in self.terms))

    def evaluate(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        out = np.zeros(np.shape(X), dtype=np.complex128)
        for kx, ky, amplitude in self.terms:
            if kx == 0 and ky == 0:
                out += amplitude
            else:
                out += amplitude * torus_character(X, Y, kx, ky)
        return out
