import numpy as np
import pytest

from core.sieve import WeightSeries
from core.sparse import (PSSequence, SparseWeight, TechLemma, delta_h_fourier_l1, reparam_check,
                         sparse_count_table)
from lab.LabExceptions import InvalidArgument

GOLDEN = (np.sqrt(5) - 1) / 2

#
# PSSequence
#

def test_unit_exponent_is_every_integer():
    seq = PSSequence.build(1.0, 50)
    assert np.array_equal(seq.members, np.arange(1, 51))
    assert np.array_equal(seq.preimages, np.arange(1, 51))

def test_three_halves_up_to_a_thousand():
    seq = PSSequence.build(1.5, 1000)
    assert len(seq) == 100
    assert seq.members[-1] == 1000
    assert seq.members[:4].tolist() == [1, 2, 5, 8]

def test_members_strictly_increase_and_verify():
    seq = PSSequence.build(1.1, 10 ** 4)
    assert np.all(np.diff(seq.members) > 0)
    assert seq.verify_floors()
    assert abs(len(seq) - int(np.floor((10 ** 4) ** (1 / 1.1)))) <= 1

def test_count_table_deviation():
    for c in (1.01, 1.05, 1.1):
        rows = sparse_count_table(c, [10 ** k for k in range(1, 6)])
        assert [row["N"] for row in rows] == [10, 100, 1000, 10 ** 4, 10 ** 5]
        assert all(abs(row["deviation"]) <= 1 for row in rows)

def test_count_table_limit_guard():
    with pytest.raises(InvalidArgument):
        PSSequence.build(1.1, 100).count_table([1000])

def test_indicator_marks_members():
    seq = PSSequence.build(1.5, 100)
    mask = seq.indicator(1, 11)
    assert np.flatnonzero(mask).tolist() == [0, 1, 4, 7]

@pytest.mark.parametrize("c,N", [(0.9, 100), (1.1, 0)])
def test_invalid_sequence(c, N):
    with pytest.raises(InvalidArgument):
        PSSequence.build(c, N)

#
# SparseWeight
#

def test_unit_exponent_weight_vanishes():
    W = SparseWeight.build(1.0, 64)
    assert W.series.start == 33 and W.series.stop == 65
    assert np.all(W.series.values == 0)

def test_weight_is_one_off_the_sequence():
    W = SparseWeight.build(1.5, 1000)
    seq = PSSequence.build(1.5, 1000)
    off = [n for n in range(501, 1001) if n not in set(seq.members.tolist())]
    assert all(W.series.at(n) == 1 for n in off)
    assert W.series.at(729).real == pytest.approx(1 - 1.5 * 729 ** (1 - 1 / 1.5))

def test_weight_mean_is_small():
    N = 1 << 14
    W = SparseWeight.build(1.05, N)
    assert abs(W.mean()) <= 5 / np.sqrt(N)
    assert np.max(np.abs(W.series.values)) <= W.bound()

#
# Difference Fourier norms
#

def test_fourier_l1_of_vanishing_difference():
    W = SparseWeight.build(1.0, 256)
    row = delta_h_fourier_l1(W, 3)
    assert row.l1_norm == 0
    assert row.exponent(256) == float("-inf")
    # h beyond the window leaves no overlap
    assert delta_h_fourier_l1(SparseWeight.build(1.1, 256), 200).l1_norm == 0

def test_fourier_l1_of_point_mass():
    row = delta_h_fourier_l1(WeightSeries.point_mass(0, 0.5 + 0.5j), 0)
    assert row.l1_norm == pytest.approx(0.5)
    assert row.spacing == pytest.approx(1 / 8)

@pytest.mark.parametrize("h", [1, 7, 100, 1500])
def test_fourier_l1_quadrature_converges(h):
    W = SparseWeight.build(1.1, 1 << 12)
    coarse = delta_h_fourier_l1(W, h, oversample=8).l1_norm
    fine = delta_h_fourier_l1(W, h, oversample=16).l1_norm
    assert abs(fine - coarse) < 0.01 * fine

def test_fourier_l1_trivial_bound_chain():
    W = SparseWeight.build(1.1, 1 << 12)
    for h in TechLemma.sample_shifts(W.N, 32, seed=5):
        row = delta_h_fourier_l1(W, int(h))
        support = max(W.N // 2 - int(h), 0)
        assert row.within_trivial_bound
        assert row.l1_norm <= row.l2_bound * (1 + 1e-9)
        assert row.l2_bound <= support * W.bound() ** 2 * (1 + 1e-9)
    point = delta_h_fourier_l1(WeightSeries.point_mass(0, 0.5 + 0.5j), 0)
    assert point.l1_norm == pytest.approx(point.l2_bound)

def test_fourier_l1_oversample_guard():
    with pytest.raises(InvalidArgument):
        delta_h_fourier_l1(SparseWeight.build(1.1, 256), 1, oversample=4)

def test_sample_shifts_are_deterministic():
    a = TechLemma.sample_shifts(4096, 64, seed=7)
    b = TechLemma.sample_shifts(4096, 64, seed=7)
    assert np.array_equal(a, b)
    assert np.all((a >= 1) & (a <= 4096))
    assert np.all(np.diff(a) > 0)
    assert a[0] == 1

def test_tech_stats_for_unit_exponent(pool):
    stats = TechLemma(pool=pool).stats(1.0, 8, h_samples=16)
    assert stats.max_exponent == float("-inf")
    assert stats.bad_fraction == 0

def test_tech_stats_exponent_margin(pool):
    stats = TechLemma(pool=pool).stats(1.1, 12, h_samples=64, seed=3)
    assert stats.exponent_bound == pytest.approx(0.5 + (1 - 1 / 1.1))
    assert stats.max_exponent <= stats.exponent_bound + 0.15
    summary = stats.summary()
    assert summary["bound_violations"] == stats.bound_violations == 0
    assert summary["N"] == 4096 and summary["samples"] == len(stats.rows)

def test_tech_stats_same_on_threads(pool, threaded_pool):
    inline = TechLemma(pool=pool).stats(1.05, 10, h_samples=32, seed=1)
    threaded = TechLemma(pool=threaded_pool).stats(1.05, 10, h_samples=32, seed=1)
    assert [row.l1_norm for row in inline.rows] == [row.l1_norm for row in threaded.rows]

def test_tech_stats_scale_guard(pool):
    with pytest.raises(InvalidArgument):
        TechLemma(pool=pool).stats(1.1, 17)

@pytest.mark.slow
def test_bad_fraction_does_not_grow(pool):
    for c in (1.01, 1.05, 1.1):
        fractions = [row["bad_fraction"] for row in TechLemma(pool=pool).trend(c, (10, 12, 14), 256)]
        assert all(b <= a + 0.05 for a, b in zip(fractions, fractions[1:]))

#
# Reparametrization
#

def test_reparam_constant_at_unit_exponent():
    result = reparam_check(lambda n: np.ones(n.size), 1.0, 1000)
    assert result.lhs == pytest.approx(1.0)
    assert result.rhs == pytest.approx(1.0)

def test_reparam_constant_sequence():
    result = reparam_check(lambda n: np.ones(n.size), 1.1, 1 << 16)
    assert result.lhs == pytest.approx(1.0)
    assert result.rhs == pytest.approx(1.0, abs=0.01)

def test_reparam_rotation():
    result = reparam_check(lambda n: np.exp(2j * np.pi * ((GOLDEN * n) % 1.0)), 1.05, 1 << 16)
    assert isinstance(result.lhs, complex)
    assert result.difference <= 0.02

def test_reparam_rejects_unbounded_rule():
    with pytest.raises(InvalidArgument):
        reparam_check(lambda n: 2.0 * np.ones(n.size), 1.1, 100)
