from __future__ import annotations
from dataclasses import dataclass
from typing import Callable
import numpy as np

from core.sieve import FactorSieve
from lab.LabExceptions import InvalidArgument

@dataclass(frozen=True)
class PrimeComparison:
    M: int
    lhs: complex # (1/pi(M)) sum_{p<=M} a_p
    rhs: complex # (1/M) sum_{n<=M} Lambda(n) a_n

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)

def prime_vs_mangoldt(a: Callable[[np.ndarray], np.ndarray], M: int, sieve: FactorSieve) -> PrimeComparison:
    '''
    Average of a over primes against its von Mangoldt weighted average,
    both at scale M. `a` maps an integer array to values with |a| <= 1.
    '''
    primes = sieve.primes_upto(M)
    if primes.size == 0:
        raise InvalidArgument(f"Invalid scale: no primes up to {M}")
    lam = sieve.von_mangoldt_series(M)
    n = lam.indices()
    values = np.asarray(a(n), dtype=np.complex128)
    if np.any(np.abs(values) > 1 + 1e-12):
        raise InvalidArgument("Invalid sequence rule: |a_n| > 1")
    lhs = complex(np.mean(values[primes - 1]))
    rhs = complex(np.sum(lam.values * values) / M)
    return PrimeComparison(M=M, lhs=lhs, rhs=rhs)
