from math import gcd
import numpy as np

from core.sieve import FactorSieve
from lab.LabExceptions import NotCoprimeError, InvalidArgument

def mobius(n: int) -> int:
    return FactorSieve.shared(n).mobius(n)

def totient(n: int) -> int:
    return FactorSieve.shared(n).totient(n)


class ExponentialSums:
    '''
    Ramanujan sums and quadratic Gauss sums: closed forms and the
    direct unit-sum evaluators they are checked against.
    '''

    @staticmethod
    def ramanujan_sum(q: int, n: int) -> int:
        '''
        c_q(n) = mu(q/g) phi(q) / phi(q/g), g = gcd(n, q).
        '''
        if q < 1:
            raise InvalidArgument(f"Invalid modulus: {q}")
        g = gcd(n, q)
        return mobius(q // g) * totient(q) // totient(q // g)

    @staticmethod
    def ramanujan_table(q: int) -> np.ndarray:
        '''
        Returns c_q(r) for r = 0, ..., q-1.
        '''
        return np.array([ExponentialSums.ramanujan_sum(q, r) for r in range(q)], dtype=np.float64)

    @staticmethod
    def ramanujan_sum_direct(q: int, n: int) -> complex:
        a = np.array([a for a in range(q) if gcd(a, q) == 1], dtype=np.int64)
        return complex(np.sum(np.exp(2j * np.pi * ((a * n) % q) / q)))

    @staticmethod
    def gauss_sum(a: int, q: int) -> complex:
        '''
        G(a/q) = (1/q) sum_{r <= q} e(-r^2 a / q).
        '''
        r = np.arange(1, q + 1, dtype=np.int64)
        return complex(np.mean(np.exp(-2j * np.pi * ((r * r * a) % q) / q)))

    @staticmethod
    def gauss_sum_squared(a: int, q: int) -> complex:
        '''
        Closed form of G(a/q)^2.
        '''
        if q < 1 or gcd(a, q) != 1:
            raise NotCoprimeError(f"Invalid Gauss sum arguments: gcd({a}, {q}) != 1")
        if q % 2 == 1:
            return complex((-1) ** ((q - 1) // 2) / q)
        if q % 4 == 2:
            return 0j
        assert a % 2 == 1
        return complex(0, -2 * (-1) ** (((a % 4) - 1) // 2) / q)

    @staticmethod
    def signed_unit_sum(q: int, n: int) -> complex:
        '''
        Direct sum over units a mod q (q = 0 mod 4) of (-1)^((a-1)/2) e(na/q).
        '''
        a = np.array([a for a in range(q) if gcd(a, q) == 1], dtype=np.int64)
        signs = np.where(a % 4 == 1, 1.0, -1.0)
        return complex(np.sum(signs * np.exp(2j * np.pi * ((a * n) % q) / q)))
