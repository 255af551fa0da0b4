from __future__ import annotations
from functools import lru_cache
import logging
import numpy as np
from scipy import fft

from .GowersResult import GowersResult
from core.parallel import WorkerPool
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument, SupportCapExceeded

logger = logging.getLogger("gowers")

BRUTE_SUPPORT_CAP = 256
U3_SUPPORT_CAP = 1 << 20
NEGATIVE_FLOOR = -1e-12

def _shifted_product(v: np.ndarray, h: int) -> np.ndarray:
    '''
    Delta_h on a bare array: x -> v(x) conj v(x+h), cut to the overlap.
    Relative positions are preserved, which is all a Gowers sum sees.
    '''
    L = v.size
    if abs(h) >= L:
        return v[:0]
    if h >= 0:
        return v[:L - h] * np.conj(v[h:])
    return v[-h:] * np.conj(v[:L + h])

def _clamp(s: int, raw: float, scale: float) -> GowersResult:
    if raw < 0:
        if raw >= NEGATIVE_FLOOR * max(scale, 1.0):
            logger.warning(f"Negative U^{s} power clamped. Raw: {raw}.")
            return GowersResult(s=s, raw_power=0.0, clamped=True)
        logger.error(f"Negative U^{s} power beyond rounding floor. Raw: {raw}.")
    return GowersResult(s=s, raw_power=raw)

class GowersNorm:
    '''
    Gowers uniformity norms of finitely supported sequences on Z.

    Brute force is the oracle for s <= 3. U^2 goes through the fourth
    moment of the Fourier transform, U^3 through the foliation
    sum_h ||Delta_h f||_{U^2}^4.
    '''

    def __init__(self, pool: WorkerPool | None = None, brute_cap: int = BRUTE_SUPPORT_CAP,
                 u3_cap: int = U3_SUPPORT_CAP):
        self.pool = pool or WorkerPool.default()
        self.brute_cap = brute_cap
        self.u3_cap = u3_cap

    @staticmethod
    def difference(f: WeightSeries, h: int) -> WeightSeries:
        '''
        Delta_h f(x) = f(x) conj f(x+h) on the overlap of the two windows.
        '''
        lo, hi = max(f.start, f.start - h), min(f.stop, f.stop - h)
        if lo >= hi:
            return WeightSeries(label=f"D{h}{f.label}", start=f.start, values=np.zeros(1))
        return WeightSeries(label=f"D{h}{f.label}", start=lo,
                            values=f.window(lo, hi) * np.conj(f.window(lo + h, hi + h)))

    def u_norm_brute(self, f: WeightSeries, s: int) -> GowersResult:
        '''
        Direct sum of Delta_{h_1..h_s} f(x) over all x and shifts.
        '''
        if s not in (1, 2, 3):
            raise InvalidArgument(f"Invalid Gowers order: s={s}")
        v = f.trimmed().values
        if v.size > self.brute_cap:
            raise SupportCapExceeded(support=v.size, cap=self.brute_cap)

        def level(arr: np.ndarray, depth: int) -> complex:
            if arr.size == 0:
                return 0j
            if depth == 1:
                # sum over x and h of arr(x) conj arr(x+h), every pair listed
                return complex(np.sum(arr[:, None] * np.conj(arr[None, :])))
            return sum(level(_shifted_product(arr, h), depth - 1) for h in range(1 - arr.size, arr.size))

        total = level(v, s)
        scale = float(np.sum(np.abs(v)) ** (1 << s)) if v.size else 0.0
        if abs(total.imag) > 1e-9 * max(scale, 1.0):
            logger.warning(f"Brute U^{s} sum has imaginary part {total.imag}.")
        return _clamp(s, total.real, scale)

    @staticmethod
    def _u2_power(v: np.ndarray) -> float:
        if v.size == 0:
            return 0.0
        n = 1 << max(1, (2 * v.size - 1).bit_length())
        spectrum = fft.fft(v, n)
        return float(np.sum(np.abs(spectrum) ** 4) / n)

    def u2_fft(self, f: WeightSeries) -> GowersResult:
        '''
        raw power = sum_k |(f * f)(k)|^2, computed as the L^4 norm of the
        zero-padded transform.
        '''
        v = f.trimmed().values
        raw = self._u2_power(v)
        return _clamp(2, raw, raw)

    def u3_fft(self, f: WeightSeries) -> GowersResult:
        '''
        raw power = sum_h ||Delta_h f||_{U^2}^4. Delta_{-h} f is a translate
        of conj Delta_h f, so only h >= 0 is evaluated.
        '''
        v = f.trimmed().values
        if v.size > self.u3_cap:
            raise SupportCapExceeded(support=v.size, cap=self.u3_cap)

        def block_sum(hs: range) -> np.ndarray:
            return np.array([self._u2_power(_shifted_product(v, h)) for h in hs])

        parts = self.pool.map(block_sum, WorkerPool.blocks(v.size, 256))
        per_h = np.concatenate(parts) if parts else np.zeros(1)
        raw = float(per_h[0] + 2.0 * np.sum(per_h[1:]))
        return _clamp(3, raw, raw)

    def u_norm(self, f: WeightSeries, s: int, method: str = "fft") -> GowersResult:
        if method == "brute":
            return self.u_norm_brute(f, s)
        if s == 1:
            total = complex(np.sum(f.values))
            return GowersResult(s=1, raw_power=abs(total) ** 2)
        if s == 2:
            return self.u2_fft(f)
        if s == 3:
            return self.u3_fft(f)
        raise InvalidArgument(f"Invalid Gowers order: s={s}")

    def indicator_power(self, s: int, N: int) -> float:
        '''
        ||1_[N]||^(2^s) over Z, evaluated by the same kernels.
        '''
        return _indicator_power(s, N)

    def normalized(self, f: WeightSeries, s: int, N: int, method: str = "fft") -> GowersResult:
        '''
        ||f||_{U^s([N])} = ||f||_{U^s(Z)} / ||1_[N]||_{U^s(Z)}.
        '''
        if N < 1:
            raise InvalidArgument(f"Invalid normalizing length: N={N}")
        return self.u_norm(f, s, method).with_normalization(self.indicator_power(s, N))

    def normalized_u(self, f: WeightSeries, s: int, N: int) -> float:
        return self.normalized(f, s, N).normalized


@lru_cache(maxsize=64)
def _indicator_power(s: int, N: int) -> float:
    return GowersNorm(pool=WorkerPool(threads=1)).u_norm(WeightSeries.indicator(1, N + 1), s).raw_power
