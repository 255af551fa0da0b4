import numpy as np
import pytest
from pydantic import ValidationError

from core.arcs import FareySlice
from core.oscillation import Trace
from core.records import (GowersRecord, JumpRecord, LepingleRecord, SeriesCodec, SliceRecord,
                          SpectrumRecord, TechLemmaSummary)
from core.sieve import WeightSeries
from core.sparse import FourierL1
from lab.LabExceptions import InvalidArgument
from lab.runner.run_config import RunConfig

#
# SeriesCodec
#

def test_series_csv_layout():
    text = SeriesCodec.series_to_csv(WeightSeries(label="f", start=-1, values=[1, 0.5j]))
    assert text == "n,re,im\n-1,1,0\n0,0,0.5\n"

def test_series_csv_is_lossless(rng):
    f = WeightSeries(label="f", start=3, values=rng.standard_normal(50) + 1j * rng.standard_normal(50))
    back = SeriesCodec.series_from_csv(SeriesCodec.series_to_csv(f))
    assert back.start == 3
    assert np.array_equal(back.values, f.values)

@pytest.mark.parametrize("text", [
    "",
    "k,re,im\n1,0,0\n",
    "n,re,im\n",
    "n,re,im\n1,0,0\n3,0,0\n",
])
def test_series_csv_rejects_malformed_text(text):
    with pytest.raises(InvalidArgument):
        SeriesCodec.series_from_csv(text)

def test_trace_csv():
    trace = Trace.of([0.25, 1j], times=[1, 4])
    text = SeriesCodec.trace_to_csv(trace)
    assert text.splitlines()[0] == "N,re,im"
    back = SeriesCodec.trace_from_csv(text)
    assert back.times.tolist() == [1, 4]
    assert np.array_equal(back.values, trace.values)
    with pytest.raises(InvalidArgument):
        SeriesCodec.trace_to_csv(Trace.of(np.zeros((2, 2))))

def test_tech_rows_csv():
    rows = [FourierL1(h=1, l1_norm=16.0, spacing=0.125, l2_bound=4.0),
            FourierL1(h=2, l1_norm=0.0, spacing=0.125, l2_bound=0.0)]
    assert SeriesCodec.tech_rows_to_csv(rows, 256) == "h,l1_norm,exponent\n1,16,0.5\n2,0,-inf\n"

def test_files_use_lf(tmp_path):
    path = str(tmp_path / "f.csv")
    SeriesCodec.write(path, "n,re,im\n1,0,0\n")
    assert (tmp_path / "f.csv").read_bytes() == b"n,re,im\n1,0,0\n"
    assert SeriesCodec.read(path) == "n,re,im\n1,0,0\n"

#
# JSON records
#

def test_slice_record_keeps_lcm_as_text():
    record = SliceRecord(**FareySlice.build(4).as_dict())
    assert record.lcm == "12"
    assert record.model_dump()["fractions"] == [(1, 3), (2, 3), (1, 4), (3, 4)]
    big = SliceRecord(Q=1, fractions=[(0, 1)], lcm=10 ** 30)
    assert big.lcm == "1" + "0" * 30

def test_jump_record_alias():
    record = JumpRecord(lam=1.0, count=4)
    assert record.model_dump(by_alias=True) == {"lambda": 1.0, "count": 4}
    assert JumpRecord(**{"lambda": 2.0, "count": 1}).lam == 2.0

def test_record_validation():
    with pytest.raises(ValidationError):
        LepingleRecord(r=2.0, trials=1, max_ratio=1.0)
    with pytest.raises(ValidationError):
        GowersRecord(s=2, raw_power=1.0, method="exact")
    assert SpectrumRecord(interval=(0, 64), delta=1.0, freqs=[7]).model_dump_json() == \
        '{"interval":[0,64],"delta":1.0,"freqs":[7]}'
    summary = TechLemmaSummary(c=1.1, N=4096, samples=2, max_exponent=0.5, bad_fraction=0.0, eps_prime=0.05)
    assert summary.N == 4096

#
# Run configuration
#

def test_run_config_defaults():
    config = RunConfig(subcommand="sieve", unknown_key=3)
    assert config.s == 2 and config.threads == 1 and config.suite == "fast"

@pytest.mark.parametrize("field,value", [("seed", -1), ("s", 4), ("threads", 0), ("h_samples", 0),
                                         ("mode", "minor"), ("subcommand", "plot")])
def test_run_config_validation(field, value):
    values = {"subcommand": "sieve", field: value}
    with pytest.raises(ValidationError):
        RunConfig(**values)
