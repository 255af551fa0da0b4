from __future__ import annotations
from fractions import Fraction
import numpy as np

from .LocalFourier import _bounds
from .ThresholdLadder import ThresholdLadder
from core.major_arc import PhaseTable
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument, WindowCoverageError

MAX_DENOMINATOR = 1 << 20

def _frequencies(frequencies) -> list[Fraction]:
    fracs = [Fraction(theta) % 1 for theta in frequencies]
    if any(f.denominator > MAX_DENOMINATOR for f in fracs):
        raise InvalidArgument(f"Invalid frequency set: denominators above {MAX_DENOMINATOR}")
    if len(set(fracs)) != len(fracs):
        raise InvalidArgument("Invalid frequency set: repeated frequencies mod 1")
    return fracs

def projection(g: WeightSeries, interval, frequencies, ladder: ThresholdLadder,
               delta: float | None = None) -> WeightSeries:
    '''
    Pi_I[Lambda] g(x) = sum_theta Psi_delta(E_I Mod_-theta g) e(theta x) 1_I(x).

    Frequencies are exact rationals. delta=None applies the whole ladder,
    sum_delta Psi_delta, in place of a single level.
    '''
    lo, hi = _bounds(interval)
    if not g.covers(lo, hi):
        raise WindowCoverageError(f"Series window [{g.start}, {g.stop}) does not cover [{lo}, {hi})")
    n = np.arange(lo, hi, dtype=np.int64)
    values = g.window(lo, hi)
    out = np.zeros(hi - lo, dtype=np.complex128)
    for theta in _frequencies(frequencies):
        a, q = theta.numerator, theta.denominator
        average = np.mean(values * PhaseTable.rational(-a % q, q, n))
        amplitude = ladder.Psi_total(average) if delta is None else ladder.Psi(average, delta)
        out += complex(amplitude) * PhaseTable.rational(a, q, n)
    return WeightSeries(label=f"Pi[{lo},{hi}){g.label}", start=lo, values=out)

def projection_sup_check(g: WeightSeries, interval, frequencies, ladder: ThresholdLadder,
                         delta: float | None = None) -> float:
    '''
    sup |Pi_I g| / |Lambda|^(1/2).
    '''
    frequencies = list(frequencies)
    if not frequencies:
        return 0.0
    projected = projection(g, interval, frequencies, ladder, delta)
    return float(np.max(np.abs(projected.values))) / np.sqrt(len(frequencies))
