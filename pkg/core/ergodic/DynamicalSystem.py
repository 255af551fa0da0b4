from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
import logging
import numpy as np

from lab.LabExceptions import InvalidArgument

logger = logging.getLogger("ergodic")

SCALE = 2.0 ** 64
ROTATION = "rotation"
SKEW = "skew"
DEFAULT_ALPHA = float(np.sqrt(2.0) - 1.0)
RATIONAL_DENOMINATOR = 10 ** 6
RATIONAL_TOL = 1e-12

def to_fixed(x: float) -> np.uint64:
    '''
    Fixed-point image k of x mod 1, with x = k / 2^64.
    '''
    return np.uint64(int(round((x % 1.0) * SCALE)) % (1 << 64))

def to_float(k) -> np.ndarray:
    return np.asarray(k, dtype=np.uint64).astype(np.float64) / SCALE

@dataclass(frozen=True)
class TorusPoint:
    x: np.uint64
    y: np.uint64 = np.uint64(0)

    @classmethod
    def of(cls, x: float, y: float = 0.0) -> "TorusPoint":
        return cls(to_fixed(x), to_fixed(y))

    def as_floats(self) -> tuple[float, float]:
        return float(to_float(self.x)), float(to_float(self.y))

class DynamicalSystem:
    '''
    Rotation x -> x + alpha on T, or the skew product
    (x, y) -> (x + alpha, y + x) on T^2.

    Points are 64-bit fixed-point, so every step is an integer addition
    mod 2^64 and inverses are bit-exact. Orbits use the closed form
    T^m(x, y) = (x + m alpha, y + m x + C(m, 2) alpha).
    '''

    kind: str
    alpha: float
    step: np.uint64 # alpha in fixed point

    def __init__(self, kind: str = ROTATION, alpha: float = DEFAULT_ALPHA):
        if kind not in (ROTATION, SKEW):
            raise InvalidArgument(f"Invalid system: {kind}")
        self.kind = kind
        self.alpha = alpha
        self.step = to_fixed(alpha)
        approx = Fraction(alpha).limit_denominator(RATIONAL_DENOMINATOR)
        if abs(float(approx) - alpha) < RATIONAL_TOL:
            logger.warning(f"Rotation number {alpha} is within {RATIONAL_TOL} of {approx}.")

    @classmethod
    def rotation(cls, alpha: float = DEFAULT_ALPHA) -> "DynamicalSystem":
        return cls(ROTATION, alpha)

    @classmethod
    def skew(cls, alpha: float = DEFAULT_ALPHA) -> "DynamicalSystem":
        return cls(SKEW, alpha)

    def apply(self, p: TorusPoint) -> TorusPoint:
        x = np.array([p.x], dtype=np.uint64)
        y = np.array([p.y], dtype=np.uint64)
        if self.kind == ROTATION:
            return TorusPoint(x=(x + self.step)[0], y=p.y)
        return TorusPoint(x=(x + self.step)[0], y=(y + x)[0])

    def inverse(self, p: TorusPoint) -> TorusPoint:
        x = np.array([p.x], dtype=np.uint64)
        y = np.array([p.y], dtype=np.uint64)
        back = x - self.step
        if self.kind == ROTATION:
            return TorusPoint(x=back[0], y=p.y)
        return TorusPoint(x=back[0], y=(y - back)[0])

    def orbit(self, p: TorusPoint, m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        '''
        Returns (X, Y) fixed-point coordinates of T^m p for each integer m.
        '''
        m = np.asarray(m, dtype=np.int64)
        mu = m.astype(np.uint64)
        X = np.uint64(p.x) + mu * self.step
        if self.kind == ROTATION:
            return X, np.full(m.shape, p.y, dtype=np.uint64)
        pairs = (m * (m - 1) // 2).astype(np.uint64)
        Y = np.uint64(p.y) + mu * np.uint64(p.x) + pairs * self.step
        return X, Y

    def weyl_sum(self, p: TorusPoint, kx: int, ky: int, N: int) -> complex:
        '''
        (1/N) sum_{n=1}^N e(kx x_n + ky y_n) along the orbit of p.
        '''
        X, Y = self.orbit(p, np.arange(1, N + 1))
        return complex(np.mean(character(X, Y, kx, ky)))

def character(X: np.ndarray, Y: np.ndarray, kx: int, ky: int) -> np.ndarray:
    '''
    e(kx x + ky y), with the phase reduced mod 1 in fixed point.
    '''
    phase = np.asarray(X, dtype=np.uint64) * np.uint64(kx % (1 << 64)) \
        + np.asarray(Y, dtype=np.uint64) * np.uint64(ky % (1 << 64))
    return np.exp(2j * np.pi * to_float(phase))
