from __future__ import annotations
from dataclasses import dataclass
from math import gcd, log10
import logging

from .ReducedFraction import ReducedFraction
from lab.LabExceptions import InvalidArgument, LcmDigitCapExceeded

logger = logging.getLogger("arcs")

DEFAULT_DIGIT_CAP = 4096

def bounded_lcm(denominators, digit_cap: int = DEFAULT_DIGIT_CAP) -> int:
    '''
    Returns lcm of the denominators, raising once it passes digit_cap
    decimal digits.
    '''
    value = 1
    for q in denominators:
        value = value * q // gcd(value, q)
        if value.bit_length() * log10(2) > digit_cap + 1:
            digits = len(str(value))
            if digits > digit_cap:
                logger.error(f"Lcm digit cap exceeded. Cap: {digit_cap}. Digits: {digits}.")
                raise LcmDigitCapExceeded(digits=digits, cap=digit_cap)
    if len(str(value)) > digit_cap:
        raise LcmDigitCapExceeded(digits=len(str(value)), cap=digit_cap)
    return value

def reduced_numerators(q: int) -> list[int]:
    return [a for a in range(q) if gcd(a, q) == 1]

@dataclass(frozen=True)
class FareySlice:
    '''
    Finite set of reduced fractions with a common period.

    kind "slice" is Gamma_Q (Q/2 < q <= Q), kind "cumulative" is every
    q <= Q (the union of the dyadic slices (L/2, L], L = Q/2^j).
    '''
    Q: int
    fractions: tuple[ReducedFraction, ...] # canonical (q, a) order
    lcm: int                               # least common period of all phases
    kind: str = "slice"

    @classmethod
    def _from_denominators(cls, Q: int, denominators, digit_cap: int, kind: str, **extra):
        denominators = sorted(denominators)
        fractions = tuple(ReducedFraction(a, q) for q in denominators for a in reduced_numerators(q))
        lcm = bounded_lcm(denominators, digit_cap)
        return cls(Q=Q, fractions=fractions, lcm=lcm, kind=kind, **extra)

    @classmethod
    def build(cls, Q: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> "FareySlice":
        '''
        Returns Gamma_Q.
        '''
        if Q < 1:
            raise InvalidArgument(f"Invalid slice parameter: Q={Q}")
        return cls._from_denominators(Q, [q for q in range(1, Q + 1) if 2 * q > Q], digit_cap, "slice")

    @classmethod
    def cumulative(cls, Q: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> "FareySlice":
        '''
        Returns the union of Gamma_L over L = Q, Q/2, Q/4, ..., i.e. every q <= Q.
        '''
        if Q < 1:
            raise InvalidArgument(f"Invalid slice parameter: Q={Q}")
        return cls._from_denominators(Q, range(1, Q + 1), digit_cap, "cumulative")

    @property
    def denominators(self) -> list[int]:
        return sorted({f.q for f in self.fractions})

    def __len__(self):
        return len(self.fractions)

    def __iter__(self):
        return iter(self.fractions)

    def __contains__(self, frac: ReducedFraction):
        return frac in set(self.fractions)

    def as_dict(self) -> dict:
        return {"Q": self.Q, "i": getattr(self, "i", None),
                "fractions": [[f.a, f.q] for f in self.fractions], "lcm": str(self.lcm)}


@dataclass(frozen=True)
class DyadicFareySlice(FareySlice):
    '''
    Gamma_Q^(i): the fractions of Gamma_Q whose denominator is exactly
    divisible by 2^i.
    '''
    i: int = 0

    @classmethod
    def build(cls, Q: int, i: int = 0, digit_cap: int = DEFAULT_DIGIT_CAP) -> "DyadicFareySlice":
        if Q < 1 or i < 0 or (1 << i) > Q:
            raise InvalidArgument(f"Invalid dyadic slice parameters: Q={Q}, i={i}")
        denominators = [q for q in range(1, Q + 1)
                        if 2 * q > Q and q % (1 << i) == 0 and q % (1 << (i + 1)) != 0]
        return cls._from_denominators(Q, denominators, digit_cap, "dyadic", i=i)

    @staticmethod
    def levels(Q: int) -> range:
        return range(Q.bit_length())


def slice_statistics(Q: int, digit_cap: int = DEFAULT_DIGIT_CAP) -> list[dict]:
    '''
    Per dyadic level i: |Gamma_Q^(i)|, digits of lcm and the bound checks
    |Gamma_Q^(i)| <= Q^2/2^i and lcm_i <= 2^i * 3^(Q/2^i).
    '''
    rows = []
    for i in DyadicFareySlice.levels(Q):
        part = DyadicFareySlice.build(Q, i, digit_cap)
        size = len(part)
        # lcm_i <= 2^i 3^(Q/2^i)  <=>  lcm_i^(2^i) <= 2^(i 2^i) 3^Q
        lcm_ok = part.lcm ** (1 << i) <= (1 << (i << i)) * 3 ** Q
        rows.append({
            "i": i,
            "size": size,
            "lcm_digits": len(str(part.lcm)),
            "size_bound_ok": size * (1 << i) <= Q * Q,
            "lcm_bound_ok": bool(lcm_ok),
        })
    return rows
