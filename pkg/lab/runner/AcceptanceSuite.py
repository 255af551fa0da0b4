from __future__ import annotations
from fractions import Fraction
from itertools import combinations
from math import log
import logging
import time
import numpy as np

from core.arcs import DyadicFareySlice, ExponentialSums, MultiplicityCounter
from core.ergodic import (DynamicalSystem, Observable, TorusPoint, bilinear_average, integer_model_average,
                          prime_vs_mangoldt)
from core.major_arc import Admissibility, ArcModel, DivisorArcs, MajorArcWeight, TwoSquaresSplit, SLICE, CUMULATIVE
from core.major_arc.ArcModel import divisor_coefficient
from core.oscillation import Trace, variation, jump_count, jump_sup
from core.records import AcceptanceRow
from core.sieve import ArithmeticSeries, WeightSeries
from core.sparse import sparse_count_table
from core.spectra import ShiftedGrid, ThresholdLadder, sampling_check, wavepacket_energy
from lab.LabExceptions import LabError

logger = logging.getLogger("verify")

FAST = "fast"
FULL = "full"

IDENTITY_RTOL = 1e-8
PS_EXPONENTS = (1.01, 1.05, 1.1)

def _worst_gap(a, b) -> float:
    '''
    max |a - b| relative to max(1, |b|).
    '''
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))))

class AcceptanceSuite:
    '''
    The ten acceptance criteria. The fast suite runs 1, 2, 7 and 10 at
    their stated scales and 8, 9 at reduced size; the full suite runs
    every criterion at its stated scale.
    '''

    def __init__(self, runner, seed: int = 0):
        self.runner = runner
        self.seed = seed
        self.criteria = {
            1: ("exact identities", self.exact_identities),
            2: ("gowers oracle", self.gowers_oracle),
            3: ("voronoi progressions", self.voronoi_progressions),
            4: ("coefficient recovery", self.coefficient_recovery),
            5: ("major arc residual trend", self.residual_trend),
            6: ("piatetski-shapiro", self.piatetski_shapiro),
            7: ("oscillation", self.oscillation),
            8: ("spectra", self.spectra),
            9: ("ergodic averages", self.ergodic_averages),
            10: ("multiplicity bound", self.multiplicity_bound),
        }

    def plan(self, suite: str) -> list[tuple[int, bool]]:
        '''
        (criterion, full size) pairs for a suite.
        '''
        if suite == FULL:
            return [(k, True) for k in self.criteria]
        return [(1, True), (2, True), (7, True), (10, True), (8, False), (9, False)]

    def run(self, suite: str = FAST) -> list[AcceptanceRow]:
        rows = []
        for criterion, full in self.plan(suite):
            name, check = self.criteria[criterion]
            started = time.perf_counter()
            try:
                passed, detail = check(full)
            except LabError as exc:
                logger.error(f"Criterion {criterion} raised {type(exc).__name__}: {exc}")
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            row = AcceptanceRow(criterion=criterion, name=name, passed=passed, detail=detail,
                                seconds=time.perf_counter() - started)
            logger.info(f"Criterion {criterion} {'passed' if passed else 'FAILED'}. {detail}. "
                        f"Seconds: {row.seconds:.2f}.")
            rows.append(row)
        return rows

    @staticmethod
    def table(rows: list[AcceptanceRow]) -> str:
        lines = [f"{'#':>2}  {'criterion':<26}{'result':<8}{'seconds':>9}  detail"]
        for row in rows:
            lines.append(f"{row.criterion:>2}  {row.name:<26}{'PASS' if row.passed else 'FAIL':<8}"
                         f"{row.seconds:>9.2f}  {row.detail}")
        lines.append(f"{sum(r.passed for r in rows)}/{len(rows)} criteria passed")
        return "\n".join(lines)

    def _rng(self, criterion: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, criterion])

    #
    # 1. Exact identities
    #

    def exact_identities(self, full: bool) -> tuple[bool, str]:
        gaps = {}

        worst = 0.0
        for q in range(1, 201):
            closed = ExponentialSums.ramanujan_table(q)
            direct = [ExponentialSums.ramanujan_sum_direct(q, n) for n in range(q)]
            worst = max(worst, _worst_gap(direct, closed))
        gaps["ramanujan"] = worst

        worst = 0.0
        for q in range(1, 201):
            for a in (a for a in range(q) if np.gcd(a, q) == 1):
                worst = max(worst, _worst_gap(ExponentialSums.gauss_sum(a, q) ** 2,
                                              ExponentialSums.gauss_sum_squared(a, q)))
            if q % 4 == 0:
                signed = [ExponentialSums.signed_unit_sum(q, n) for n in range(q)]
                shifted = -1j * ExponentialSums.ramanujan_table(q)[(np.arange(q) + q // 4) % q]
                worst = max(worst, _worst_gap(signed, shifted))
        gaps["gauss"] = worst

        n = np.arange(1, 1001)
        gaps["type_one"] = _worst_gap(DivisorArcs.tau_type1(n, 10, 1e5), DivisorArcs.ramanujan_form(n, 10, 1e5))

        odd, even = TwoSquaresSplit.r2_arc_split(12, 1000)
        cumulative = MajorArcWeight(ArcModel.two_squares(), 12, mode=CUMULATIVE).weight_series(1000)
        gaps["r2_split"] = _worst_gap(odd.values + even.values, cumulative.values)

        worst = 0.0
        for Q in range(1, 17):
            weight = MajorArcWeight(ArcModel.mangoldt(), Q, mode=SLICE)
            moment = Admissibility.moment(weight.weight_series(weight.lcm), 1, weight.lcm)
            worst = max(worst, _worst_gap(moment.value, Admissibility.parseval_mass(weight)))
        gaps["parseval"] = worst

        N = 10 ** 4
        lam = self.runner.sieve(N).von_mangoldt_series(N).values.real
        total = np.zeros(N)
        for d in np.flatnonzero(lam) + 1:
            total[d - 1::d] += lam[d - 1]
        gaps["chebyshev"] = _worst_gap(total, np.log(np.arange(1, N + 1)))

        r2 = ArithmeticSeries.two_squares_series(N).values.real[1:]
        chi = np.zeros(N)
        for d in range(1, N + 1, 2):
            chi[d - 1::d] += 1 if d % 4 == 1 else -1
        gaps["r2_sweep"] = _worst_gap(r2, 4 * chi)

        worst_name = max(gaps, key=gaps.get)
        return (all(g <= IDENTITY_RTOL for g in gaps.values()),
                f"worst gap {gaps[worst_name]:.2e} ({worst_name})")

    #
    # 2. Gowers oracle
    #

    def gowers_oracle(self, full: bool) -> tuple[bool, str]:
        rng = self._rng(2)
        norm = self.runner.norm
        cases = []
        for s, support in ((2, 64), (3, 32)):
            for _ in range(200):
                L = int(rng.integers(1, support + 1))
                values = rng.standard_normal(L) + 1j * rng.standard_normal(L)
                cases.append((s, WeightSeries(label="f", start=int(rng.integers(-50, 51)), values=values)))

        def compare(case) -> float:
            s, f = case
            brute = norm.u_norm(f, s, "brute").raw_power
            return abs(norm.u_norm(f, s, "fft").raw_power - brute) / max(abs(brute), 1e-300)

        oracle_gap = max(self.runner.pool.map(compare, cases))

        indicator_ok = True
        for N in range(1, 65):
            exact = (2 * N ** 3 + N) // 3
            f = WeightSeries.indicator(1, N + 1)
            indicator_ok &= round(norm.u_norm(f, 2, "brute").raw_power) == exact
            indicator_ok &= abs(norm.u_norm(f, 2).raw_power - exact) <= 1e-10 * exact

        modulation_gap = 0.0
        for _ in range(20):
            L = int(rng.integers(2, 33))
            f = WeightSeries(label="f", start=0, values=rng.standard_normal(L) + 1j * rng.standard_normal(L))
            theta, beta = rng.random(), rng.random()
            n = f.indices()
            quadratic = f.relabel("g", f.values * np.exp(2j * np.pi * ((beta * n * n + theta * n) % 1.0)))
            for s, g in ((2, f.modulated(theta)), (3, quadratic)):
                base = norm.u_norm(f, s).raw_power
                modulation_gap = max(modulation_gap, abs(norm.u_norm(g, s).raw_power - base) / base)

        passed = oracle_gap <= IDENTITY_RTOL and indicator_ok and modulation_gap <= 1e-9
        return passed, (f"fft/brute gap {oracle_gap:.2e}, indicator {'exact' if indicator_ok else 'WRONG'}, "
                        f"modulation gap {modulation_gap:.2e}")

    #
    # 3. Voronoi progressions
    #

    def voronoi_progressions(self, full: bool) -> tuple[bool, str]:
        scales = (10 ** 4, 10 ** 5, 10 ** 6)
        tau = ArithmeticSeries.divisor_series(max(scales))
        worst = 0.0
        for N in scales:
            for q in (1, 2, 3, 4, 6):
                for a in range(1, q + 1):
                    exact, main = DivisorArcs.ap_divisor_sum(N, a, q, tau)
                    worst = max(worst, abs(exact - main) / (4 * N ** (2.0 / 3.0)))
        return worst <= 1.0, f"max |exact - main| / 4N^(2/3) = {worst:.3f}"

    #
    # 4. Coefficient recovery
    #

    def coefficient_recovery(self, full: bool) -> tuple[bool, str]:
        N = 10 ** 6
        lam = self.runner.sieve(N).von_mangoldt_series(N)
        mangoldt = abs(Admissibility.recover_coefficient(lam, 1, 3) - (-0.5))
        r2 = ArithmeticSeries.two_squares_weight(N)
        squares = abs(Admissibility.recover_coefficient(r2, 1, 4) - (-0.5j))
        tau = ArithmeticSeries.divisor_series(N)
        divisor = abs(Admissibility.recover_coefficient(tau, 0, 1) - divisor_coefficient(1, N))
        passed = mangoldt <= 0.02 and squares <= 0.01 and divisor <= 0.01 * log(N)
        return passed, f"Lambda {mangoldt:.4f}, r2/pi {squares:.4f}, tau {divisor:.4f}"

    #
    # 5. Major arc residual trend
    #

    def residual_trend(self, full: bool) -> tuple[bool, str]:
        N = 1 << 14
        lam = self.runner.sieve(N).von_mangoldt_series(N)
        rows = Admissibility.heath_brown_residual(lam, ArcModel.mangoldt(), (2, 4, 8, 16), 2, N, self.runner.norm)
        values = [row.residual for row in rows]
        decreasing = all(b < a for a, b in zip(values, values[1:]))
        return decreasing and values[-1] <= 0.5, "residuals " + ", ".join(f"{v:.3f}" for v in values)

    #
    # 6. Piatetski-Shapiro
    #

    def piatetski_shapiro(self, full: bool) -> tuple[bool, str]:
        limits = [10 ** k for k in range(1, 7)]
        slack = self.runner.sparse_config.get("bad_fraction_slack", 0.05)
        deviation, exponent_margin, trend_ok = 0, float("inf"), True
        for c in PS_EXPONENTS:
            deviation = max(deviation, max(abs(row["deviation"]) for row in sparse_count_table(c, limits)))
            stats = self.runner.tech.stats(c, 12, 256, self.seed)
            exponent_margin = min(exponent_margin, stats.exponent_bound + 0.15 - stats.max_exponent)
            fractions = [row["bad_fraction"] for row in self.runner.tech.trend(c, (10, 12, 14), 256, self.seed)]
            trend_ok &= all(b <= a + slack for a, b in zip(fractions, fractions[1:]))
        passed = deviation <= 1 and exponent_margin >= 0 and trend_ok
        return passed, (f"count deviation {deviation}, exponent margin {exponent_margin:.3f}, "
                        f"bad-h trend {'ok' if trend_ok else 'increasing'}")

    #
    # 7. Oscillation
    #

    @staticmethod
    def _exhaustive(values: np.ndarray, r: float, lam: float) -> tuple[float, int]:
        '''
        Variation power and jump count over every increasing subsequence.
        '''
        best, jumps = 0.0, 0
        for size in range(2, values.size + 1):
            for chain in combinations(range(values.size), size):
                steps = np.abs(np.diff(values[list(chain)]))
                best = max(best, float(np.sum(steps ** r)))
                if np.all(steps >= lam):
                    jumps = max(jumps, size - 1)
        return best, jumps

    def oscillation(self, full: bool) -> tuple[bool, str]:
        rng = self._rng(7)
        r = 3.0
        mismatches, chain_violations = 0, 0
        for _ in range(500):
            M = int(rng.integers(1, 13))
            values = rng.standard_normal(M) + 1j * rng.standard_normal(M)
            trace = Trace.of(values)
            lam = float(rng.uniform(0.2, 2.0))
            power, jumps = self._exhaustive(values, r, lam)
            v = variation(trace, r)
            mismatches += abs(v ** r - power) > 1e-9 * max(1.0, power) or jump_count(trace, lam) != jumps
            chain_violations += jump_sup(trace, r) > v ** r * (1 + 1e-12)

        record = self.runner.lepingle.run(1000, 1 << 10, r, self.seed)
        passed = mismatches == 0 and chain_violations == 0 and record.max_ratio <= record.guard
        return passed, (f"dp mismatches {mismatches}, chain violations {chain_violations}, "
                        f"lepingle ratio {record.max_ratio:.3f} <= {record.guard:.1f}")

    #
    # 8. Spectra
    #

    def spectra(self, full: bool) -> tuple[bool, str]:
        rng = self._rng(8)
        window = 1 << (16 if full else 12)
        violations = 0
        for K0, Delta in ((2, 2), (6, 3), (10, 5), (14, 7)):
            for L in range(1, Delta + 1):
                if Delta == 2 and L == 1:
                    continue
                for U in range(max(Delta - 1, 1)):
                    lo = int(rng.integers(-window, window))
                    grid = ShiftedGrid(K0, Delta, L, U, (lo, lo + window))
                    violations += ShiftedGrid.nesting_violations(grid.intervals())
                    small = ShiftedGrid(K0, Delta, L, U, (lo, lo + (1 << 10))).intervals()
                    violations += ShiftedGrid.nesting_violations_pairwise(small)

        ladder = ThresholdLadder(1.0, self.runner.spectra_config.get("ladder_levels", 40))
        partition_error = ladder.partition_error()

        N = 256
        scan = self.runner.spectra_config.get("scan_factor", 8)
        worst_sampling = 0.0
        for _ in range(100 if full else 20):
            if rng.random() < 0.5:
                values = np.exp(2j * np.pi * rng.random(N))
            else:
                thetas = rng.random(int(rng.integers(1, 4)))
                values = np.mean(np.exp(2j * np.pi * np.outer(np.arange(1, N + 1), thetas)), axis=1)
            g = WeightSeries(label="g", start=1, values=values)
            result = sampling_check(g, N, float(rng.uniform(0.05, 0.5)), scan_factor=scan)
            worst_sampling = max(worst_sampling, result.bound_ratio)

        M0, R = 64, 4
        scales = (M0 << R, M0 << (2 * R)) if full else (M0 << R,)
        length = scales[-1] if full else 4 * scales[-1]
        worst_energy = 0.0
        for _ in range(50 if full else 10):
            g = WeightSeries(label="g", start=0, values=np.exp(2j * np.pi * rng.random(length)))
            frequencies = rng.choice(M0, size=int(rng.integers(1, 9)), replace=False)
            energy = wavepacket_energy(g, frequencies, M0, R, scales, pool=self.runner.pool)
            worst_energy = max(worst_energy, energy.ratio)

        passed = violations == 0 and partition_error <= 1e-6 and worst_sampling <= 10 and worst_energy <= 5
        return passed, (f"nesting violations {violations}, partition error {partition_error:.1e}, "
                        f"sampling {worst_sampling:.3f}, packet ratio {worst_energy:.3f}")

    #
    # 9. Ergodic averages
    #

    def ergodic_averages(self, full: bool) -> tuple[bool, str]:
        rng = self._rng(9)
        N = 10 ** 6 if full else 10 ** 5

        covariance = 0.0
        for _ in range(10):
            x, length = int(rng.integers(-100, 100)), int(rng.integers(1, 200))
            F = WeightSeries(label="F", start=x - length, values=rng.standard_normal(length) + 1j * rng.standard_normal(length))
            G = WeightSeries(label="G", start=x + 1, values=rng.standard_normal(length) + 1j * rng.standard_normal(length))
            w = WeightSeries.from_real("w", 1, rng.standard_normal(length))
            theta = float(rng.random())
            base = integer_model_average(F, G, w, x, length)
            shifted = integer_model_average(F.modulated(theta), G.modulated(theta), w, x, length)
            covariance = max(covariance, abs(shifted - np.exp(4j * np.pi * theta * x) * base))

        system = DynamicalSystem.skew(self.runner.run.alpha)
        f = Observable.character(0, 1)
        ones = WeightSeries.from_real("1", 1, np.ones(N))
        lam = self.runner.sieve(N).von_mangoldt_series(N)
        worst_ones, worst_lam = 0.0, 0.0
        for _ in range(5):
            x0 = TorusPoint.of(rng.random(), rng.random())
            worst_ones = max(worst_ones, abs(bilinear_average(ones, system, f, f, x0, N)))
            worst_lam = max(worst_lam, abs(bilinear_average(lam, system, f, f, x0, N)))

        alpha = system.alpha
        rules = (lambda n: np.ones(n.size), lambda n: np.where(n % 2, -1.0, 1.0),
                 lambda n: np.exp(2j * np.pi * ((alpha * n) % 1.0)))
        sieve = self.runner.sieve(N)
        gap = max(prime_vs_mangoldt(rule, N, sieve).gap for rule in rules)

        passed = covariance <= 1e-9 and worst_ones <= 0.02 and worst_lam <= 0.05 and gap <= 0.02
        return passed, (f"covariance {covariance:.1e}, |B| ones {worst_ones:.4f}, |B| Lambda {worst_lam:.4f}, "
                        f"prime gap {gap:.4f}")

    #
    # 10. Multiplicity bound
    #

    def multiplicity_bound(self, full: bool) -> tuple[bool, str]:
        rng = self._rng(10)
        bit_cap = self.runner.arcs_config.get("multiplicity_bit_cap", 512)
        worst = 0.0
        failures = 0
        for _ in range(50):
            K0 = int(rng.integers(1, 9))
            j = int(rng.integers(0, (1024 // K0).bit_length()))
            M0 = K0 << j
            Q = int(rng.integers(1, 17))
            i = int(rng.integers(0, Q.bit_length()))
            size = int(rng.integers(1, min(M0, 32) + 1))
            frequencies = [Fraction(int(x), M0) for x in rng.choice(M0, size=size, replace=False)]
            m = int(rng.choice([k for k in range(-10, 11) if k]))
            n = int(rng.choice([-1, 1]))
            result = MultiplicityCounter(frequencies, M0, bit_cap).count(DyadicFareySlice.build(Q, i), m, n)
            bound = MultiplicityCounter.bound(K0, i, size)
            failures += result.maximum > bound
            worst = max(worst, result.maximum / bound)
        return failures == 0, f"violations {failures}, max multiplicity / bound {worst:.3f}"
