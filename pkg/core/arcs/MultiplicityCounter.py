from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
import logging
from sortedcontainers import SortedDict

from .FareySlice import FareySlice
from lab.LabExceptions import InvalidArgument, RationalOverflowError

logger = logging.getLogger("arcs")

@dataclass(frozen=True)
class MultiplicityResult:
    counts: SortedDict  # xi mod 1 -> number of pairs (theta, a/q)
    maximum: int
    pairs: int          # |Lambda| * |slice|

class MultiplicityCounter:
    '''
    Counts representations xi = m theta + n a/q mod 1 with theta in a
    finite set of rationals and a/q in a Farey slice.

    All arithmetic is exact.
    '''

    frequencies: list[Fraction] # theta values, reduced mod 1
    M0: int                     # common denominator of the frequencies
    bit_cap: int                # largest permitted denominator size

    def __init__(self, frequencies, M0: int, bit_cap: int = 512):
        self.M0 = M0
        self.bit_cap = bit_cap
        seen = set()
        for theta in frequencies:
            theta = Fraction(theta) % 1
            if M0 % theta.denominator != 0:
                raise InvalidArgument(f"Invalid frequency {theta}: denominator does not divide M0={M0}")
            seen.add(theta)
        self.frequencies = sorted(seen)

    def count(self, part: FareySlice, m: int, n: int) -> MultiplicityResult:
        if abs(m) > 10 or abs(n) > 10:
            raise InvalidArgument(f"Invalid coefficients: m={m}, n={n}")

        counts = SortedDict()
        for theta in self.frequencies:
            shift = m * theta
            for frac in part:
                xi = (shift + n * frac.as_fraction()) % 1
                if xi.denominator.bit_length() > self.bit_cap:
                    logger.error(f"Rational overflow. Denominator bits: {xi.denominator.bit_length()}.")
                    raise RationalOverflowError(bits=xi.denominator.bit_length(), cap=self.bit_cap)
                counts[xi] = counts.get(xi, 0) + 1

        maximum = max(counts.values()) if counts else 0
        return MultiplicityResult(counts=counts, maximum=maximum,
                                  pairs=len(self.frequencies) * len(part))

    @staticmethod
    def bound(K0: int, i: int, size: int) -> int:
        '''
        min{105 2^i K0, |Lambda|}.
        '''
        return min(105 * (1 << i) * K0, size)
