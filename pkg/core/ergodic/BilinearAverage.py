from __future__ import annotations
from dataclasses import dataclass
import logging
import numpy as np

from .DynamicalSystem import DynamicalSystem, TorusPoint
from .Observable import Observable
from core.oscillation import Trace
from core.parallel import WorkerPool
from core.sieve import WeightSeries
from core.sparse import PSSequence
from lab.LabExceptions import InvalidArgument, WindowCoverageError

logger = logging.getLogger("ergodic")

LACUNARY_STEPS = 4 # N_j = floor(2^(j/4))

@dataclass(frozen=True)
class AverageTrace(Trace):
    label: str = "B"

def _divide(total, count) -> np.ndarray:
    '''
    total / count on the real and imaginary parts separately, so integer
    totals divide exactly.
    '''
    total = np.asarray(total)
    out = np.empty(total.shape, dtype=np.complex128)
    out.real = total.real / count
    out.imag = total.imag / count
    return out

def _weights(w: WeightSeries, N: int) -> np.ndarray:
    if N < 1:
        raise InvalidArgument(f"Invalid average length: N={N}")
    if not w.covers(1, N + 1):
        raise WindowCoverageError(f"Weight window [{w.start}, {w.stop}) does not cover [1, {N}]")
    return w.window(1, N + 1)

def orbit_products(w: WeightSeries, system: DynamicalSystem, f: Observable, g: Observable,
                   x0: TorusPoint, N: int, exponents: tuple[int, int] = (1, -1)) -> np.ndarray:
    '''
    w(n) f(T^{an} x0) g(T^{bn} x0) for n = 1..N.
    '''
    a, b = exponents
    n = np.arange(1, N + 1, dtype=np.int64)
    weights = _weights(w, N)
    fx = f.evaluate(*system.orbit(x0, a * n))
    gx = g.evaluate(*system.orbit(x0, b * n))
    return weights * fx * gx

def bilinear_average(w: WeightSeries, system: DynamicalSystem, f: Observable, g: Observable,
                     x0: TorusPoint, N: int, exponents: tuple[int, int] = (1, -1)) -> complex:
    '''
    B_{w,N}(f, g)(x0) = (1/N) sum_{n<=N} w(n) f(T^{an} x0) g(T^{bn} x0).
    '''
    return complex(_divide(np.sum(orbit_products(w, system, f, g, x0, N, exponents)), N))

def integer_model_average(F: WeightSeries, G: WeightSeries, w: WeightSeries, x: int, N: int) -> complex:
    '''
    (1/N) sum_{n<=N} w(n) F(x - n) G(x + n).
    '''
    weights = _weights(w, N)
    if not F.covers(x - N, x) or not G.covers(x + 1, x + N + 1):
        raise WindowCoverageError(f"Series windows do not cover [{x - N}, {x + N}]")
    backward = F.window(x - N, x)[::-1] # F(x-1), ..., F(x-N)
    forward = G.window(x + 1, x + N + 1)
    return complex(_divide(np.sum(weights * backward * forward), N))

def lacunary_grid(N_max: int, steps: int = LACUNARY_STEPS) -> np.ndarray:
    '''
    Distinct floor(2^(j/steps)) up to N_max.
    '''
    top = int(np.floor(steps * np.log2(max(N_max, 1)))) + 1
    grid = np.unique(np.floor(2.0 ** (np.arange(top + 1) / steps)).astype(np.int64))
    return grid[(grid >= 1) & (grid <= N_max)]

def average_trace(w: WeightSeries, system: DynamicalSystem, f: Observable, g: Observable,
                  x0: TorusPoint, time_grid=None, N_max: int | None = None,
                  exponents: tuple[int, int] = (1, -1)) -> AverageTrace:
    '''
    B_N along a time grid from one prefix sum of the orbit products.
    '''
    if time_grid is None:
        if N_max is None:
            raise InvalidArgument("Invalid trace request: give a time grid or N_max")
        time_grid = lacunary_grid(N_max)
    times = np.asarray(time_grid, dtype=np.int64)
    if times.size == 0 or times[0] < 1 or np.any(np.diff(times) <= 0):
        raise InvalidArgument("Invalid time grid: must be positive and increasing")
    prefix = np.cumsum(orbit_products(w, system, f, g, x0, int(times[-1]), exponents))
    return AverageTrace(times=times, values=_divide(prefix[times - 1], times), label=f"B[{w.label}]")

def average_traces(w: WeightSeries, system: DynamicalSystem, f: Observable, g: Observable,
                   points: list[TorusPoint], time_grid, pool: WorkerPool | None = None) -> list[AverageTrace]:
    pool = pool or WorkerPool.default()
    return pool.map(lambda p: average_trace(w, system, f, g, p, time_grid), points)

def sparse_bilinear_average(w: WeightSeries, sequence: PSSequence, system: DynamicalSystem,
                            f: Observable, g: Observable, x0: TorusPoint, N: int) -> complex:
    '''
    Average of w(n) f(T^n x0) g(T^-n x0) over n in N_c cap [1, N].
    '''
    n = sequence.members[sequence.members <= N]
    if n.size == 0:
        raise InvalidArgument(f"Empty sparse range: N={N}")
    weights = _weights(w, N)[n - 1]
    fx = f.evaluate(*system.orbit(x0, n))
    gx = g.evaluate(*system.orbit(x0, -n))
    return complex(_divide(np.sum(weights * fx * gx), n.size))
