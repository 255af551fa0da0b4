from __future__ import annotations
from math import isqrt
import logging
import os
import threading
import numpy as np

from .WeightSeries import WeightSeries
from lab.LabExceptions import InvalidArgument, SieveLimitError

logger = logging.getLogger("sieve")

CACHE_ENV = "ARITH_LAB_CACHE"
SHARED_MIN_LIMIT = 1 << 12

class FactorSieve:
    '''
    Smallest-prime-factor table on [0, limit].

    Every multiplicative series the lab uses (Lambda, mu, phi) is
    read off this table. spf[0] = spf[1] = 0.
    '''

    limit: int      # largest integer covered
    spf: np.ndarray # smallest prime factor, int64

    _shared: "FactorSieve | None" = None
    _shared_lock = threading.Lock()

    def __init__(self, limit: int, spf: np.ndarray):
        self.limit = limit
        self.spf = spf
        self._primes = None
        self._mu_phi = None

    @classmethod
    def build(cls, limit: int, cache_dir: str | None = None) -> "FactorSieve":
        '''
        Builds the sieve, reusing a cached table when a cache
        directory is given or ARITH_LAB_CACHE is set.
        '''
        if limit < 2:
            raise InvalidArgument(f"Invalid sieve limit: {limit}")

        cache_dir = cache_dir or os.environ.get(CACHE_ENV)
        path = os.path.join(cache_dir, f"spf_{limit}.npy") if cache_dir else None
        if path and os.path.exists(path):
            spf = np.load(path)
            if spf.shape == (limit + 1,):
                logger.info(f"Sieve loaded from cache. Limit: {limit}.")
                return cls(limit, spf)
            logger.warning(f"Cached sieve at {path} has the wrong shape; rebuilding")

        spf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p::p]
                block[block == 0] = p
        rest = np.flatnonzero(spf == 0)
        rest = rest[rest >= 2]
        spf[rest] = rest

        if path:
            os.makedirs(cache_dir, exist_ok=True)
            np.save(path, spf)
        logger.info(f"Sieve built. Limit: {limit}.")
        return cls(limit, spf)

    def _check(self, N: int) -> None:
        if N > self.limit:
            raise SieveLimitError(f"Invalid range: N={N} exceeds sieve limit {self.limit}")
        if N < 1:
            raise InvalidArgument(f"Invalid range: N={N}")

    def primes_upto(self, N: int) -> np.ndarray:
        '''
        Returns the ordered primes p <= N.
        '''
        if N > self.limit:
            raise SieveLimitError(f"Invalid range: N={N} exceeds sieve limit {self.limit}")
        if self._primes is None:
            idx = np.arange(self.limit + 1, dtype=np.int64)
            self._primes = np.flatnonzero((self.spf == idx) & (idx >= 2)).astype(np.int64)
        return self._primes[:np.searchsorted(self._primes, N, side="right")]

    def factorize(self, n: int) -> dict[int, int]:
        '''
        Returns {p: k} with n = prod p^k.
        '''
        if not 1 <= n <= self.limit:
            raise SieveLimitError(f"Invalid integer for factorization: {n}")
        out = {}
        while n > 1:
            p = int(self.spf[n])
            while n % p == 0:
                n //= p
                out[p] = out.get(p, 0) + 1
        return out

    def divisor_count(self, n: int) -> int:
        count = 1
        for k in self.factorize(n).values():
            count *= k + 1
        return count

    def von_mangoldt_series(self, N: int) -> WeightSeries:
        '''
        Returns Lambda on [1, N]: log p at n = p^k, 0 elsewhere.
        '''
        self._check(N)
        lam = np.zeros(N, dtype=np.float64)
        base = self.primes_upto(N)
        power = base.copy()
        logs = np.log(base.astype(np.float64))
        while power.size:
            lam[power - 1] = logs
            keep = power <= N // base
            base, logs = base[keep], logs[keep]
            power = power[keep] * base
        return WeightSeries.from_real("Lambda", 1, lam)

    def mobius_totient_series(self, N: int) -> tuple[WeightSeries, WeightSeries]:
        '''
        Returns (mu, phi) on [1, N].
        '''
        self._check(N)
        mu = np.ones(N + 1, dtype=np.int64)
        phi = np.arange(N + 1, dtype=np.int64)
        for p in self.primes_upto(N):
            p = int(p)
            mu[p::p] *= -1
            if p <= N // p:
                mu[p * p::p * p] = 0
            phi[p::p] -= phi[p::p] // p
        return (WeightSeries.from_real("mu", 1, mu[1:]),
                WeightSeries.from_real("phi", 1, phi[1:]))

    def mobius_table(self, N: int) -> np.ndarray:
        '''
        Returns integer mu on [0, N] with mu[0] = 0.
        '''
        mu, _ = self.mobius_totient_series(N)
        return np.concatenate(([0], mu.values.real.astype(np.int64)))

    #
    # Point values
    #

    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self._mu_phi is None:
            mu, phi = self.mobius_totient_series(self.limit)
            self._mu_phi = (np.concatenate(([0], mu.values.real.astype(np.int64))),
                            np.concatenate(([0], phi.values.real.astype(np.int64))))
        return self._mu_phi

    def mobius(self, n: int) -> int:
        self._check(n)
        return int(self._tables()[0][n])

    def totient(self, n: int) -> int:
        self._check(n)
        return int(self._tables()[1][n])

    def is_prime(self, n: int) -> bool:
        if n > self.limit:
            raise SieveLimitError(f"Invalid integer: {n} exceeds sieve limit {self.limit}")
        return n >= 2 and int(self.spf[n]) == n

    @classmethod
    def shared(cls, n: int) -> "FactorSieve":
        '''
        A process-wide sieve covering n, rebuilt at the next power of two
        once outgrown. Denominator-scale mu, phi and primality read from it.
        '''
        with cls._shared_lock:
            if cls._shared is None or cls._shared.limit < n:
                cls._shared = cls.build(max(SHARED_MIN_LIMIT, 1 << max(n, 1).bit_length()))
            return cls._shared
