import numpy as np
import pytest

from core.gowers import GowersNorm, GowersResult
from core.sieve import WeightSeries
from lab.LabExceptions import InvalidArgument, SupportCapExceeded

GOLDEN = (np.sqrt(5) - 1) / 2

def random_series(rng, size, start=0):
    values = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return WeightSeries(label="random", start=start, values=values)

def quadratic_phase(theta, N):
    n = np.arange(1, N + 1)
    return WeightSeries(label="quadratic", start=1, values=np.exp(2j * np.pi * ((theta * n * n) % 1.0)))

#
# Difference operator
#

def test_difference_of_unimodular_pair():
    f = WeightSeries(label="f", start=0, values=[1, 1j])
    assert np.array_equal(GowersNorm.difference(f, 0).values, np.array([1, 1], dtype=complex))

def test_difference_shrinks_interval():
    d = GowersNorm.difference(WeightSeries.indicator(1, 3), 1)
    assert d.start == 1
    assert np.array_equal(d.values, np.array([1], dtype=complex))

def test_difference_without_overlap_is_zero():
    d = GowersNorm.difference(WeightSeries.indicator(0, 4), 10)
    assert np.all(d.values == 0)

#
# Norm values
#

@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("method", ["brute", "fft"])
def test_point_mass_has_unit_norm(s, method):
    assert GowersNorm().u_norm(WeightSeries.point_mass(5), s, method).raw_power == pytest.approx(1.0)

@pytest.mark.parametrize("method", ["brute", "fft"])
def test_two_point_indicator(method):
    assert GowersNorm().u_norm(WeightSeries.indicator(1, 3), 2, method).raw_power == pytest.approx(6.0)

@pytest.mark.parametrize("N", [1, 2, 5, 17, 64])
def test_indicator_power_closed_form(N):
    norm = GowersNorm()
    assert norm.indicator_power(2, N) == pytest.approx((2 * N ** 3 + N) / 3)
    assert norm.indicator_power(1, N) == pytest.approx(N ** 2)

def test_normalized_indicator_is_one():
    norm = GowersNorm()
    for s in (1, 2, 3):
        assert norm.normalized_u(WeightSeries.indicator(1, 101), s, 100) == pytest.approx(1.0)

def test_translation_invariance(rng):
    f = random_series(rng, 40)
    g = WeightSeries(label="shifted", start=1000, values=f.values)
    norm = GowersNorm()
    for s in (2, 3):
        assert norm.u_norm(f, s).raw_power == pytest.approx(norm.u_norm(g, s).raw_power, rel=1e-12)

#
# FFT against brute force
#

def test_u2_fft_matches_brute(rng):
    norm = GowersNorm()
    for _ in range(50):
        f = random_series(rng, int(rng.integers(1, 65)), int(rng.integers(-100, 100)))
        brute = norm.u_norm(f, 2, "brute").raw_power
        assert norm.u_norm(f, 2, "fft").raw_power == pytest.approx(brute, rel=1e-9)

def test_u3_fft_matches_brute(rng):
    norm = GowersNorm()
    for _ in range(20):
        f = random_series(rng, int(rng.integers(1, 33)))
        brute = norm.u_norm(f, 3, "brute").raw_power
        assert norm.u_norm(f, 3, "fft").raw_power == pytest.approx(brute, rel=1e-9)

def test_u3_fft_same_on_threads(rng, pool, threaded_pool):
    f = random_series(rng, 1000)
    inline = GowersNorm(pool=pool).u3_fft(f).raw_power
    threaded = GowersNorm(pool=threaded_pool).u3_fft(f).raw_power
    assert threaded == inline

#
# Modulation invariance
#

def test_u2_invariant_under_linear_phase(rng):
    norm = GowersNorm()
    f = random_series(rng, 200, start=1)
    base = norm.u2_fft(f).raw_power
    assert norm.u2_fft(f.modulated(GOLDEN)).raw_power == pytest.approx(base, rel=1e-9)

def test_u3_invariant_under_quadratic_phase(rng):
    norm = GowersNorm()
    f = random_series(rng, 128, start=1)
    n = f.indices()
    twisted = f.relabel("twisted", f.values * np.exp(2j * np.pi * ((GOLDEN * n * n + 0.3 * n) % 1.0)))
    assert norm.u3_fft(twisted).raw_power == pytest.approx(norm.u3_fft(f).raw_power, rel=1e-9)

def test_quadratic_phase_has_small_u2():
    norm = GowersNorm()
    coarse = norm.normalized_u(quadratic_phase(GOLDEN, 1024), 2, 1024)
    fine = norm.normalized_u(quadratic_phase(GOLDEN, 4096), 2, 4096)
    assert fine < coarse
    assert fine < 0.2
    # U^3 still sees the quadratic phase
    assert norm.normalized_u(quadratic_phase(GOLDEN, 512), 3, 512) == pytest.approx(1.0)

def bounded_series(rng, N):
    values = rng.uniform(0, 1, N) * np.exp(2j * np.pi * rng.random(N))
    return WeightSeries(label="bounded", start=1, values=values)

@pytest.mark.parametrize("method, sizes", [("brute", (8, 16, 24)), ("fft", (64, 256))])
def test_u2_bounded_by_u3(rng, method, sizes):
    norm = GowersNorm()
    for N in sizes:
        for _ in range(5):
            f = bounded_series(rng, N)
            u2 = norm.normalized(f, 2, N, method).normalized
            u3 = norm.normalized(f, 3, N, method).normalized
            assert u2 <= u3 * (1 + 1e-9)
        flat = WeightSeries.indicator(1, N + 1)
        assert norm.normalized(flat, 2, N, method).normalized == pytest.approx(
            norm.normalized(flat, 3, N, method).normalized, rel=1e-9)

def test_linear_phase_has_full_u2():
    f = WeightSeries.indicator(1, 513).modulated(GOLDEN)
    assert GowersNorm().normalized_u(f, 2, 512) == pytest.approx(1.0)

#
# Caps and validation
#

def test_brute_support_cap():
    with pytest.raises(SupportCapExceeded) as err:
        GowersNorm(brute_cap=256).u_norm(WeightSeries.indicator(0, 300), 2, "brute")
    assert err.value.support == 300
    assert err.value.exit_code == 1

def test_brute_cap_uses_trimmed_support():
    f = WeightSeries.from_real("padded", 0, np.concatenate([np.zeros(500), np.ones(10), np.zeros(500)]))
    assert GowersNorm(brute_cap=16).u_norm(f, 2, "brute").raw_power == pytest.approx((2 * 1000 + 10) / 3)

def test_u3_support_cap():
    with pytest.raises(SupportCapExceeded):
        GowersNorm(u3_cap=10).u3_fft(WeightSeries.indicator(0, 20))

@pytest.mark.parametrize("method", ["brute", "fft"])
def test_invalid_order(method):
    with pytest.raises(InvalidArgument):
        GowersNorm().u_norm(WeightSeries.point_mass(), 4, method)

def test_normalized_needs_positive_length():
    with pytest.raises(InvalidArgument):
        GowersNorm().normalized(WeightSeries.point_mass(), 2, 0)

def test_result_normalization():
    result = GowersResult(s=2, raw_power=16.0).with_normalization(81.0)
    assert result.norm() == pytest.approx(2.0)
    assert result.normalized == pytest.approx(2 / 3)
    assert result.as_dict() == {"s": 2, "raw_power": 16.0, "normalized": result.normalized}
