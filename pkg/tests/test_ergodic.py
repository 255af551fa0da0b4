import numpy as np
import pytest

from core.ergodic import (DynamicalSystem, Observable, TorusPoint, average_trace, average_traces,
                          bilinear_average, integer_model_average, lacunary_grid, prime_vs_mangoldt,
                          sparse_bilinear_average, to_fixed, to_float)
from core.oscillation import variation
from core.sieve import WeightSeries
from core.sparse import PSSequence
from lab.LabExceptions import InvalidArgument, WindowCoverageError

GOLDEN = float((np.sqrt(5) - 1) / 2)

def ones(N, start=1):
    return WeightSeries.from_real("1", start, np.ones(N))

def e(x):
    return np.exp(2j * np.pi * x)

#
# Fixed-point torus
#

def test_fixed_point_round_trip():
    assert to_fixed(0.0) == 0
    assert to_fixed(1.25) == to_fixed(0.25)
    assert float(to_float(to_fixed(0.375))) == 0.375
    assert TorusPoint.of(0.5, 0.75).as_floats() == (0.5, 0.75)

@pytest.mark.parametrize("kind", ["rotation", "skew"])
def test_inverse_is_bit_exact(kind, rng):
    system = DynamicalSystem(kind, GOLDEN)
    start = TorusPoint.of(rng.random(), rng.random())
    p = start
    for _ in range(200):
        p = system.apply(p)
    for _ in range(200):
        p = system.inverse(p)
    assert p == start

@pytest.mark.parametrize("kind", ["rotation", "skew"])
def test_orbit_closed_form_matches_iteration(kind, rng):
    system = DynamicalSystem(kind, GOLDEN)
    start = TorusPoint.of(rng.random(), rng.random())
    X, Y = system.orbit(start, np.arange(0, 51))
    p = start
    for m in range(51):
        assert (X[m], Y[m]) == (p.x, p.y)
        p = system.apply(p)
    X, Y = system.orbit(start, -np.arange(0, 51))
    p = start
    for m in range(51):
        assert (X[m], Y[m]) == (p.x, p.y)
        p = system.inverse(p)

def test_system_validation():
    with pytest.raises(InvalidArgument):
        DynamicalSystem("shift")

def test_rotation_weyl_sum_is_small():
    system = DynamicalSystem.rotation(GOLDEN)
    assert abs(system.weyl_sum(TorusPoint.of(0.1), 1, 0, 10 ** 5)) < 1e-3
    assert system.weyl_sum(TorusPoint.of(0.1), 0, 0, 100) == pytest.approx(1.0)

@pytest.mark.parametrize("kx, ky", [(1, 0), (0, 1), (1, 1), (2, -3)])
def test_skew_weyl_sums_are_small(kx, ky):
    system = DynamicalSystem.skew(GOLDEN)
    for p in (TorusPoint.of(0.1, 0.2), TorusPoint.of(0.7, 0.0)):
        assert abs(system.weyl_sum(p, kx, ky, 10 ** 6)) < 0.01
    assert system.weyl_sum(TorusPoint.of(0.1, 0.2), 0, 0, 100) == pytest.approx(1.0)

#
# Observables
#

def test_observable_evaluation():
    f = Observable.constant(2.0) + Observable.character(1, 0, 0.5j)
    assert f.l1_norm == pytest.approx(2.5)
    X = np.array([to_fixed(0.25)], dtype=np.uint64)
    Y = np.zeros(1, dtype=np.uint64)
    assert f.evaluate(X, Y) == pytest.approx([2.0 + 0.5j * 1j])

#
# Bilinear averages
#

def test_constant_average_is_one():
    system = DynamicalSystem.skew(GOLDEN)
    one = Observable.constant()
    assert bilinear_average(ones(1000), system, one, one, TorusPoint.of(0.3, 0.6), 1000) == 1.0

def test_rotation_average_of_characters():
    x0 = TorusPoint.of(0.123, 0.0)
    f = Observable.character(1, 0)
    value = bilinear_average(ones(5000), DynamicalSystem.rotation(GOLDEN), f, f, x0, 5000)
    assert value == pytest.approx(e(2 * 0.123), abs=1e-9)

def test_skew_average_decays():
    N = 10 ** 6
    f = Observable.character(0, 1)
    value = bilinear_average(ones(N), DynamicalSystem.skew(GOLDEN), f, f, TorusPoint.of(0.2, 0.7), N)
    assert abs(value) <= 0.02

def test_average_needs_covering_weight():
    f = Observable.constant()
    with pytest.raises(WindowCoverageError):
        bilinear_average(ones(10), DynamicalSystem.rotation(), f, f, TorusPoint.of(0.1), 20)
    with pytest.raises(InvalidArgument):
        bilinear_average(ones(10), DynamicalSystem.rotation(), f, f, TorusPoint.of(0.1), 0)

def test_sparse_average_with_every_integer():
    N = 2000
    system = DynamicalSystem.skew(GOLDEN)
    f = Observable.character(1, 1)
    x0 = TorusPoint.of(0.4, 0.9)
    sparse = sparse_bilinear_average(ones(N), PSSequence.build(1.0, N), system, f, f, x0, N)
    assert sparse == pytest.approx(bilinear_average(ones(N), system, f, f, x0, N), abs=1e-12)

#
# Integer model
#

def test_integer_model_with_mangoldt(sieve):
    N = 10 ** 6
    lam = sieve.von_mangoldt_series(N)
    F = ones(N, start=-N)
    G = ones(N, start=1)
    assert integer_model_average(F, G, lam, 0, N) == pytest.approx(1.0, abs=0.01)

def test_integer_model_modulation_covariance(small_sieve, rng):
    N, x, theta = 1000, 37, 0.137
    lam = small_sieve.von_mangoldt_series(N)
    F = WeightSeries(label="F", start=x - N, values=np.exp(2j * np.pi * rng.random(N)))
    G = WeightSeries(label="G", start=x + 1, values=np.exp(2j * np.pi * rng.random(N)))
    base = integer_model_average(F, G, lam, x, N)
    twisted = integer_model_average(F.modulated(theta), G.modulated(theta), lam, x, N)
    assert twisted == pytest.approx(e(2 * theta * x) * base, abs=1e-9)

def test_integer_model_of_zero_weight():
    N = 100
    zero = WeightSeries.from_real("0", 1, np.zeros(N))
    assert integer_model_average(ones(N, -N), ones(N), zero, 0, N) == 0

def test_integer_model_window_guard():
    N = 100
    with pytest.raises(WindowCoverageError):
        integer_model_average(ones(N - 1, -N + 1), ones(N), ones(N), 0, N)
    with pytest.raises(WindowCoverageError):
        integer_model_average(ones(N, -N), ones(N, 2), ones(N), 0, N)

#
# Traces along lacunary times
#

def test_lacunary_grid():
    grid = lacunary_grid(100, 4)
    assert grid[0] == 1
    assert grid[-1] <= 100
    assert np.all(np.diff(grid) > 0)
    assert 64 in grid and 90 in grid

def test_constant_trace_has_no_variation():
    one = Observable.constant()
    trace = average_trace(ones(4096), DynamicalSystem.rotation(), one, one, TorusPoint.of(0.1), N_max=4096)
    assert np.all(trace.values == 1)
    assert variation(trace, 2) == 0

def test_constant_complex_weight_averages_exactly():
    one = Observable.constant()
    w = WeightSeries(label="c", start=1, values=np.full(200, 3 - 2j))
    system, x0 = DynamicalSystem.rotation(), TorusPoint.of(0.1)
    trace = average_trace(w, system, one, one, x0, np.arange(1, 201))
    assert np.all(trace.values == 3 - 2j)
    assert variation(trace, 2) == 0
    for N in (7, 107, 199):
        assert bilinear_average(w, system, one, one, x0, N) == 3 - 2j

def test_mangoldt_rotation_trace_converges(sieve):
    N = 1 << 16
    x0 = TorusPoint.of(0.3)
    f = Observable.character(1, 0)
    trace = average_trace(sieve.von_mangoldt_series(N), DynamicalSystem.rotation(GOLDEN), f, f, x0,
                          lacunary_grid(N))
    assert trace.times[-1] == N
    assert trace.values[-1] == pytest.approx(e(0.6), abs=0.02)

def test_trace_matches_pointwise_averages():
    N = 512
    system = DynamicalSystem.skew(GOLDEN)
    f = Observable.character(0, 1)
    x0 = TorusPoint.of(0.15, 0.85)
    trace = average_trace(ones(N), system, f, f, x0, [1, 10, 100, 512])
    for t, value in zip(trace.times, trace.values):
        assert value == pytest.approx(bilinear_average(ones(N), system, f, f, x0, int(t)), abs=1e-12)

def test_traces_over_points(rng, threaded_pool):
    N = 1024
    system = DynamicalSystem.skew(GOLDEN)
    f = Observable.character(1, 1)
    points = [TorusPoint.of(rng.random(), rng.random()) for _ in range(6)]
    grid = lacunary_grid(N)
    traces = average_traces(ones(N), system, f, f, points, grid, pool=threaded_pool)
    for p, trace in zip(points, traces):
        assert np.array_equal(trace.values, average_trace(ones(N), system, f, f, p, grid).values)

def test_trace_grid_guard():
    one = Observable.constant()
    with pytest.raises(InvalidArgument):
        average_trace(ones(10), DynamicalSystem.rotation(), one, one, TorusPoint.of(0.1))
    with pytest.raises(InvalidArgument):
        average_trace(ones(10), DynamicalSystem.rotation(), one, one, TorusPoint.of(0.1), [3, 2])

#
# Primes against von Mangoldt
#

@pytest.mark.parametrize("rule", [
    lambda n: np.ones(n.size),
    lambda n: (-1.0) ** n,
    lambda n: e((GOLDEN * n) % 1.0),
])
def test_prime_average_matches_mangoldt_average(sieve, rule):
    assert prime_vs_mangoldt(rule, 10 ** 6, sieve).gap <= 0.02

def test_prime_average_guards(small_sieve):
    with pytest.raises(InvalidArgument):
        prime_vs_mangoldt(lambda n: 2.0 * np.ones(n.size), 100, small_sieve)
    with pytest.raises(InvalidArgument):
        prime_vs_mangoldt(lambda n: np.ones(n.size), 1, small_sieve)
