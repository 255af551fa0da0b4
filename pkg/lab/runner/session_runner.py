from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
import json
import logging
import numpy as np
import yaml

from core.arcs import FareySlice, DyadicFareySlice, slice_statistics
from core.ergodic import (DynamicalSystem, Observable, TorusPoint, average_trace, lacunary_grid)
from core.gowers import GowersNorm
from core.major_arc import Admissibility, ArcModel, MajorArcWeight
from core.oscillation import LepingleCheck, variation, jump_count, jump_sup, lacunary_lipschitz
from core.parallel import WorkerPool
from core.records import (SeriesCodec, SliceRecord, SliceStatisticsRow, GowersRecord, GowersComparison,
                          TechLemmaSummary, LepingleRecord, GridRecord, SamplingRecord, EnergyRecord, SpectraReport,
                          JumpRecord, ErgodicDiagnostics)
from core.sieve import ArithmeticSeries, FactorSieve, WeightSeries
from core.sparse import TechLemma
from core.spectra import (ShiftedGrid, ThresholdLadder, projection, sampling_check, spec_delta,
                          wavepacket_energy)
from lab.LabExceptions import InvalidArgument
from .run_config import RunConfig

logger = logging.getLogger("runner")

DEFAULT_N = 1 << 10
DEFAULT_ERGODIC_N = 1 << 16

@dataclass
class Output:
    text: str               # primary payload: printed, or written to --out
    csv: str | None = None  # tabular side payload, written to --out when present
    exit_code: int = 0

class LabSessionRunner:
    '''
    Loads the layered configuration, builds the shared workers and
    dispatches one subcommand.
    '''

    def __init__(self, path_to_config: str):
        self.config = self.load_config(path_to_config)
        self._sieves: dict[int, FactorSieve] = {}

    def load_config(self, path_to_config):
        '''
        Safely loads config.
        '''
        with open(path_to_config, 'r') as file:
            data = yaml.safe_load(file)

            self.sieve_config = data.get("sieve_config", {})
            self.arcs_config = data.get("arcs_config", {})
            self.gowers_config = data.get("gowers_config", {})
            self.sparse_config = data.get("sparse_config", {})
            self.oscillation_config = data.get("oscillation_config", {})
            self.spectra_config = data.get("spectra_config", {})
            self.ergodic_config = data.get("ergodic_config", {})
            self.run_defaults = data.get("run_config", {})
            self.logger_config = data.get("logger_config", {})
        return data

    def merge(self, flags: dict, user_config: str | None = None) -> RunConfig:
        '''
        flags over the user config file over config.yaml defaults.
        '''
        merged = {"alpha": self.ergodic_config.get("alpha"),
                  "h_samples": self.sparse_config.get("h_samples"),
                  "eps_prime": self.sparse_config.get("eps_prime"),
                  "oversample": self.sparse_config.get("oversample"),
                  "trials": self.oscillation_config.get("lepingle_trials"),
                  **self.run_defaults}
        if user_config:
            with open(user_config, 'r') as file:
                overrides = yaml.safe_load(file) or {}
            if not isinstance(overrides, dict):
                raise InvalidArgument(f"Invalid config file {user_config}: expected key: value pairs")
            merged.update(overrides)
        merged.update({k: v for k, v in flags.items() if v is not None})
        return RunConfig(**{k: v for k, v in merged.items() if v is not None})

    def _build(self, run: RunConfig):
        '''
        Constructs the shared workers for one run.
        '''
        self.run = run
        self.pool = WorkerPool.configure(threads=run.threads, deterministic=run.deterministic)
        self.norm = GowersNorm(pool=self.pool,
                               brute_cap=self.gowers_config.get("brute_support_cap", 256),
                               u3_cap=self.gowers_config.get("u3_support_cap", 1 << 20))
        self.tech = TechLemma(pool=self.pool, eps_prime=run.eps_prime, oversample=run.oversample)
        self.lepingle = LepingleCheck(pool=self.pool)
        self.digit_cap = self.arcs_config.get("lcm_digit_cap", 4096)

    def sieve(self, limit: int) -> FactorSieve:
        for built, sieve in self._sieves.items():
            if built >= limit:
                return sieve
        cache_dir = self.sieve_config.get("cache_dir") or None
        self._sieves[limit] = FactorSieve.build(limit, cache_dir)
        return self._sieves[limit]

    def execute(self, run: RunConfig) -> Output:
        self._build(run)
        logger.info(f"Running {run.subcommand}. Seed: {run.seed}. Threads: {run.threads}.")
        return getattr(self, f"cmd_{run.subcommand}")(run)

    #
    # Helpers
    #

    @staticmethod
    def _require(value, name: str):
        if value is None:
            raise InvalidArgument(f"Missing required flag --{name}")
        return value

    @staticmethod
    def _truncation(run: RunConfig, N: int) -> int:
        '''
        --q when given, else Q(N) = floor(exp((log N)^(1/8))).
        '''
        if run.q is not None:
            return run.q
        Q = Admissibility.default_truncation(N)
        logger.info(f"No --q given. Using Q({N}) = {Q}.")
        return Q

    def _input_series(self, run: RunConfig) -> WeightSeries:
        path = self._require(run.input, "input")
        return SeriesCodec.series_from_csv(SeriesCodec.read(path), label=path)

    def _arc_model(self, run: RunConfig, N: int) -> ArcModel:
        if run.model == "mangoldt":
            return ArcModel.mangoldt()
        if run.model == "divisor":
            return ArcModel.divisor(N)
        if run.model == "two_squares":
            return ArcModel.two_squares()
        raise InvalidArgument(f"Invalid arc model: {run.model}")

    #
    # Subcommands
    #

    def cmd_sieve(self, run: RunConfig) -> Output:
        N = run.n or DEFAULT_N
        if run.model == "mangoldt":
            series = self.sieve(N).von_mangoldt_series(N)
        elif run.model in ("mobius", "totient"):
            mu, phi = self.sieve(N).mobius_totient_series(N)
            series = mu if run.model == "mobius" else phi
        elif run.model == "divisor":
            series = ArithmeticSeries.divisor_series(N)
        elif run.model == "two_squares":
            series = ArithmeticSeries.two_squares_weight(N)
        else:
            raise InvalidArgument(f"Invalid sieve series: {run.model}")
        return Output(text=SeriesCodec.series_to_csv(series))

    def cmd_arcs(self, run: RunConfig) -> Output:
        Q = self._truncation(run, run.n or DEFAULT_N)
        if run.i is not None:
            record = SliceRecord(**DyadicFareySlice.build(Q, run.i, self.digit_cap).as_dict())
            return Output(text=record.model_dump_json())
        record = SliceRecord(**FareySlice.build(Q, self.digit_cap).as_dict())
        rows = [SliceStatisticsRow(**row).model_dump() for row in slice_statistics(Q, self.digit_cap)]
        return Output(text=json.dumps({"slice": record.model_dump(), "statistics": rows}))

    def cmd_weight(self, run: RunConfig) -> Output:
        N = run.n or DEFAULT_N
        Q = self._truncation(run, N)
        weight = MajorArcWeight(self._arc_model(run, N), Q, mode=run.mode, i=run.i, digit_cap=self.digit_cap)
        return Output(text=SeriesCodec.series_to_csv(weight.weight_series(N)))

    def cmd_gowers(self, run: RunConfig) -> Output:
        f = self._input_series(run)

        def record(method: str) -> GowersRecord:
            result = self.norm.u_norm(f, run.s, method)
            if run.n is not None:
                result = result.with_normalization(self.norm.indicator_power(run.s, run.n))
            return GowersRecord(s=run.s, raw_power=result.raw_power, normalized=result.normalized, method=method)

        if run.method != "both":
            return Output(text=record(run.method).model_dump_json())
        brute, fast = record("brute"), record("fft")
        gap = abs(brute.raw_power - fast.raw_power) / max(abs(brute.raw_power), 1e-300)
        return Output(text=GowersComparison(s=run.s, brute=brute, fft=fast, relative_gap=gap).model_dump_json())

    def cmd_ps(self, run: RunConfig) -> Output:
        N = run.n or 1 << 12
        log2N = N.bit_length() - 1
        if 1 << log2N != N:
            raise InvalidArgument(f"Invalid scale: N={N} is not a power of two")
        stats = self.tech.stats(run.c, log2N, run.h_samples, run.seed)
        summary = TechLemmaSummary(**stats.summary())
        return Output(text=summary.model_dump_json(), csv=SeriesCodec.tech_rows_to_csv(stats.rows, N))

    def cmd_osc(self, run: RunConfig) -> Output:
        if run.input is None:
            length = run.n or self.oscillation_config.get("lepingle_length", 1024)
            result = self.lepingle.run(run.trials, length, run.r, run.seed)
            return Output(text=LepingleRecord(**result.as_dict()).model_dump_json())
        trace = SeriesCodec.trace_from_csv(SeriesCodec.read(run.input))
        cap = self.oscillation_config.get("trace_cap", 5000)
        payload = {"r": run.r, "variation": variation(trace, run.r, cap),
                   "lacunary_lipschitz": lacunary_lipschitz(trace)}
        if len(trace) <= 200:
            payload["jump_sup"] = jump_sup(trace, run.r)
        if run.delta is not None:
            payload["jumps"] = JumpRecord(lam=run.delta, count=jump_count(trace, run.delta, cap)).model_dump(by_alias=True)
        return Output(text=json.dumps(payload))

    def cmd_spectra(self, run: RunConfig) -> Output:
        '''
        Spec_delta(I) of the input, its ladder projection (the CSV payload)
        and the grid, sampling and wave-packet checks on the same interval.
        '''
        g = self._input_series(run)
        lo = g.start if run.lo is None else run.lo
        hi = g.stop if run.hi is None else run.hi
        delta = run.delta or 1.0
        spectrum = spec_delta(g, (lo, hi), delta)
        size = hi - lo
        local = WeightSeries(label=g.label, start=lo, values=g.window(lo, hi))

        ladder = ThresholdLadder(1.0, self.spectra_config.get("ladder_levels", 40))
        frequencies = [Fraction(xi, size) for xi in spectrum.frequencies]
        projected = projection(local, (lo, hi), frequencies, ladder)
        sup = float(np.max(np.abs(projected.values))) / np.sqrt(len(frequencies)) if frequencies else 0.0

        K0, Delta, L = (self.spectra_config.get(key, default)
                        for key, default in (("grid_k0", 6), ("grid_delta", 3), ("grid_l", 1)))
        intervals = ShiftedGrid(K0, Delta, L, window=(lo, hi)).intervals()
        grid = GridRecord(K0=K0, Delta=Delta, L=L, intervals=len(intervals),
                          nesting_violations=ShiftedGrid.nesting_violations(intervals))

        sampling = None
        if np.max(np.abs(local.values)) <= 1 + 1e-12:
            result = sampling_check(local, size, delta, scan_factor=self.spectra_config.get("scan_factor", 8))
            sampling = SamplingRecord(N=size, delta=delta, count=result.count, bound_ratio=result.bound_ratio)
        else:
            logger.info(f"Input is not 1-bounded on [{lo}, {hi}). Sampling check skipped.")

        R = self.spectra_config.get("packet_r", 1)
        scales = [size << (R * j) for j in range(1, 64) if size << (R * j) <= len(g)]
        energy = None
        if scales:
            result = wavepacket_energy(g, spectrum.frequencies, size, R, scales, pool=self.pool)
            energy = EnergyRecord(M0=size, R=R, scales=scales, total=result.total, ratio=result.ratio)

        report = SpectraReport(**spectrum.as_dict(), projection_sup=sup, grid=grid, sampling=sampling, energy=energy)
        return Output(text=report.model_dump_json(), csv=SeriesCodec.series_to_csv(projected))

    def cmd_ergodic(self, run: RunConfig) -> Output:
        N = run.n or DEFAULT_ERGODIC_N
        if run.model == "mangoldt":
            w = self.sieve(N).von_mangoldt_series(N)
        elif run.model == "ones":
            w = WeightSeries.from_real("1", 1, np.ones(N))
        else:
            raise InvalidArgument(f"Invalid ergodic weight: {run.model}")
        system = DynamicalSystem(run.system, run.alpha)
        rng = np.random.default_rng(run.seed)
        x0 = TorusPoint.of(rng.random(), rng.random())
        f = Observable.character(0, 1) if run.system == "skew" else Observable.character(1, 0)
        g = f
        trace = average_trace(w, system, f, g, x0,
                              lacunary_grid(N, self.ergodic_config.get("lacunary_steps", 4)))
        lam = run.delta or 0.01
        diagnostics = ErgodicDiagnostics(v2=variation(trace, 2.0),
                                         jumps=JumpRecord(lam=lam, count=jump_count(trace, lam)),
                                         final=(trace.values[-1].real, trace.values[-1].imag))
        return Output(text=diagnostics.model_dump_json(by_alias=True), csv=SeriesCodec.trace_to_csv(trace))

    def cmd_verify(self, run: RunConfig) -> Output:
        from .AcceptanceSuite import AcceptanceSuite

        suite = AcceptanceSuite(self, seed=run.seed)
        rows = suite.run(run.suite)
        return Output(text=suite.table(rows), exit_code=0 if all(row.passed for row in rows) else 1)
