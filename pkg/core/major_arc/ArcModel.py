from __future__ import annotations
from dataclasses import dataclass
from math import gcd, log
import numpy as np

from core.arcs import ExponentialSums, mobius, totient
from lab.LabExceptions import InvalidArgument, NotCoprimeError

EULER_GAMMA = float(np.euler_gamma)

MANGOLDT = "mangoldt"
DIVISOR = "divisor"
TWO_SQUARES = "two_squares"

@dataclass(frozen=True)
class ArcModel:
    '''
    Coefficient rule S(a/q) for one weight family.

    Divisor coefficients depend on the scale N and carry it.
    '''
    kind: str
    N: float | None = None

    def __post_init__(self):
        if self.kind not in (MANGOLDT, DIVISOR, TWO_SQUARES):
            raise InvalidArgument(f"Invalid arc model: {self.kind}")
        if self.kind == DIVISOR and (self.N is None or self.N < 3):
            raise InvalidArgument(f"Invalid divisor scale: N={self.N}")

    @classmethod
    def mangoldt(cls) -> "ArcModel":
        return cls(MANGOLDT)

    @classmethod
    def divisor(cls, N: float) -> "ArcModel":
        return cls(DIVISOR, N)

    @classmethod
    def two_squares(cls) -> "ArcModel":
        return cls(TWO_SQUARES)

    def coefficient(self, a: int, q: int) -> complex:
        if q < 1 or gcd(a, q) != 1:
            raise NotCoprimeError(f"Invalid coefficient arguments: gcd({a}, {q}) != 1")

        if self.kind == MANGOLDT:
            return complex(mobius(q) / totient(q))
        if self.kind == DIVISOR:
            return complex(divisor_coefficient(q, self.N))
        return ExponentialSums.gauss_sum_squared(a % q, q)

    def label(self) -> str:
        return self.kind if self.N is None else f"{self.kind}(N={self.N:g})"

def divisor_coefficient(q: int, N: float) -> float:
    '''
    S_tau(1/q; N) = (1/q)(log N + 2 gamma - 1 - 2 log q).
    '''
    return (log(N) + 2 * EULER_GAMMA - 1 - 2 * log(q)) / q
