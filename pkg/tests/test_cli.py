import json
from math import log
import numpy as np
import pytest

from core.major_arc import Admissibility, ArcModel, MajorArcWeight
from core.records import SeriesCodec
from core.oscillation import Trace
from core.sieve import WeightSeries
from lab.runner.run import run

@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path

def write_series(path, series):
    SeriesCodec.write(str(path), SeriesCodec.series_to_csv(series))
    return str(path)

#
# Subcommands
#

def test_sieve(capsys):
    assert run(["sieve", "--model", "mangoldt", "--n", "10"]) == 0
    series = SeriesCodec.series_from_csv(capsys.readouterr().out)
    assert len(series) == 10
    assert series.at(8).real == pytest.approx(log(2))

def test_weight(capsys):
    assert run(["weight", "--model", "mangoldt", "--q", "2", "--n", "16"]) == 0
    series = SeriesCodec.series_from_csv(capsys.readouterr().out)
    n = np.arange(1, 17)
    assert series.values == pytest.approx(-((-1.0) ** n), abs=1e-12)

def test_arcs(capsys):
    assert run(["arcs", "--q", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["slice"]["fractions"] == [[1, 3], [2, 3], [1, 4], [3, 4]]
    assert payload["slice"]["lcm"] == "12"
    assert [row["i"] for row in payload["statistics"]] == [0, 1, 2]

    assert run(["arcs", "--q", "4", "--i", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["fractions"] == [[1, 4], [3, 4]]

def test_weight_defaults_to_log_scale_truncation(capsys):
    assert Admissibility.default_truncation(4096) == 3
    assert run(["weight", "--model", "mangoldt", "--n", "4096"]) == 0
    series = SeriesCodec.series_from_csv(capsys.readouterr().out)
    expected = MajorArcWeight(ArcModel.mangoldt(), 3).weight_series(4096)
    assert series.start == 1
    assert series.values == pytest.approx(expected.values, abs=1e-12)

def test_arcs_defaults_to_log_scale_truncation(capsys):
    assert run(["arcs", "--n", "1000000"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["slice"]["Q"] == 4
    assert payload["slice"]["fractions"] == [[1, 3], [2, 3], [1, 4], [3, 4]]

def test_gowers_both_methods(workdir, capsys):
    path = write_series(workdir / "f.csv", WeightSeries.indicator(1, 3))
    assert run(["gowers", "--s", "2", "--method", "both", "--input", path, "--n", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["brute"]["raw_power"] == pytest.approx(6.0)
    assert payload["fft"]["normalized"] == pytest.approx(1.0)
    assert payload["relative_gap"] < 1e-9

def test_ps(workdir, capsys):
    assert run(["ps", "--n", "1024", "--c", "1.05", "--h-samples", "16", "--out", "rows.csv"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["N"] == 1024 and summary["c"] == 1.05
    assert 1 <= summary["samples"] <= 16
    assert (workdir / "rows.csv").read_text().startswith("h,l1_norm,exponent\n")

def test_osc_on_a_trace(workdir, capsys):
    path = workdir / "trace.csv"
    SeriesCodec.write(str(path), SeriesCodec.trace_to_csv(Trace.of([0, 1, 0, 1, 0])))
    assert run(["osc", "--input", str(path), "--r", "2", "--delta", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["variation"] == pytest.approx(2.0)
    assert payload["jumps"] == {"lambda": 1.0, "count": 4}
    assert "jump_sup" in payload

def test_osc_lepingle(capsys):
    assert run(["osc", "--trials", "10", "--n", "64", "--r", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["trials"] == 10 and payload["length"] == 64

def test_spectra(workdir, capsys):
    n = np.arange(64)
    g = WeightSeries(label="g", start=0, values=np.exp(2j * np.pi * 7 * n / 64))
    path = write_series(workdir / "g.csv", g)
    assert run(["spectra", "--input", path, "--delta", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert {key: payload[key] for key in ("interval", "delta", "freqs")} == {"interval": [0, 64], "delta": 1.0,
                                                                              "freqs": [7]}
    assert payload["projection_sup"] == pytest.approx(1.0)
    assert payload["grid"] == {"K0": 6, "Delta": 3, "L": 1, "intervals": 12, "nesting_violations": 0}
    assert payload["sampling"]["N"] == 64
    assert payload["energy"] is None

def test_spectra_writes_projection_and_packet_energy(workdir, capsys):
    n = np.arange(256)
    g = WeightSeries(label="g", start=0, values=np.exp(2j * np.pi * 5 * n / 64))
    path = write_series(workdir / "g.csv", g)
    assert run(["spectra", "--input", path, "--delta", "1", "--lo", "0", "--hi", "64", "--out", "proj.csv"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["freqs"] == [5]
    assert payload["energy"]["M0"] == 64 and payload["energy"]["scales"] == [128, 256]
    assert payload["energy"]["total"] == pytest.approx(0.0, abs=1e-9)
    projected = SeriesCodec.series_from_csv(SeriesCodec.read("proj.csv"))
    assert projected.start == 0 and len(projected) == 64
    assert np.allclose(projected.values, g.values[:64], atol=1e-9)

def test_spectra_skips_sampling_for_unbounded_input(workdir, capsys):
    g = WeightSeries(label="g", start=0, values=np.full(32, 2.0))
    path = write_series(workdir / "g.csv", g)
    assert run(["spectra", "--input", path, "--delta", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["freqs"] == []
    assert payload["projection_sup"] == 0.0
    assert payload["sampling"] is None

def test_ergodic_is_reproducible(workdir, capsys):
    args = ["ergodic", "--n", "4096", "--model", "ones", "--system", "skew", "--deterministic"]
    assert run(args + ["--out", "a.csv"]) == 0
    first = capsys.readouterr().out
    assert run(args + ["--out", "b.csv"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert (workdir / "a.csv").read_bytes() == (workdir / "b.csv").read_bytes()
    diagnostics = json.loads(first)
    assert set(diagnostics) == {"v2", "jumps", "final"}
    assert "lambda" in diagnostics["jumps"]

def test_logs_are_written(workdir):
    assert run(["sieve", "--n", "5"]) == 0
    assert any(p.name.startswith("runner_") for p in (workdir / "logs").iterdir())

#
# Layered configuration
#

def test_config_file_and_flag_precedence(workdir, capsys):
    (workdir / "user.yaml").write_text("n: 8\nmodel: mobius\n")
    assert run(["sieve", "--config", "user.yaml"]) == 0
    series = SeriesCodec.series_from_csv(capsys.readouterr().out)
    assert len(series) == 8
    assert series.at(6).real == 1 and series.at(4).real == 0

    assert run(["sieve", "--config", "user.yaml", "--n", "5"]) == 0
    assert len(SeriesCodec.series_from_csv(capsys.readouterr().out)) == 5

#
# Exit codes
#

@pytest.mark.parametrize("argv", [
    ["plot"],
    ["arcs", "--q", "0"],
    ["ps", "--n", "1000"],
    ["sieve", "--seed", "-1"],
    ["osc", "--r", "2", "--trials", "2", "--n", "8"],
    ["gowers", "--input", "missing.csv"],
    ["weight", "--q", "4", "--model", "cramer"],
])
def test_invalid_input_exits_two(argv):
    assert run(argv) == 2

def test_bad_config_file_exits_two(workdir):
    (workdir / "list.yaml").write_text("- 1\n- 2\n")
    assert run(["sieve", "--config", "list.yaml"]) == 2

def test_help_exits_zero():
    assert run(["--help"]) == 0

def test_capacity_error_exits_one(workdir):
    path = write_series(workdir / "wide.csv", WeightSeries.indicator(0, 300))
    assert run(["gowers", "--method", "brute", "--input", path]) == 1

@pytest.mark.slow
def test_fast_verification_suite(capsys):
    assert run(["verify", "--suite", "fast"]) == 0
    assert "PASS" in capsys.readouterr().out
