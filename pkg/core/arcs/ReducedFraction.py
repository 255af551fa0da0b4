from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from lab.LabExceptions import NotCoprimeError

@dataclass(frozen=True)
class ReducedFraction:
    '''
    Reduced residue a/q mod 1 with 0 <= a < q and gcd(a, q) = 1.
    Ordered canonically by (q, a).
    '''
    a: int
    q: int

    def __post_init__(self):
        if self.q < 1 or not 0 <= self.a < self.q or gcd(self.a, self.q) != 1:
            raise NotCoprimeError(f"Invalid reduced fraction: {self.a}/{self.q}")

    @classmethod
    def of(cls, a: int, q: int) -> "ReducedFraction":
        '''
        Reduces a/q mod 1. Raises if a/q is not already reduced.
        '''
        if q < 1 or gcd(a, q) != 1:
            raise NotCoprimeError(f"Invalid fraction: gcd({a}, {q}) != 1")
        return cls(a % q, q)

    def key(self) -> tuple[int, int]:
        return (self.q, self.a)

    def __lt__(self, other: "ReducedFraction") -> bool:
        return self.key() < other.key()

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.q)

    def conjugate(self) -> "ReducedFraction":
        return ReducedFraction((-self.a) % self.q, self.q)

    def __str__(self):
        return f"{self.a}/{self.q}"
