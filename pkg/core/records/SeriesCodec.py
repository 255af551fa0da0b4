from __future__ import annotations
import csv
import io
import numpy as np

from core.sieve import WeightSeries
from core.oscillation import Trace
from lab.LabExceptions import InvalidArgument

SERIES_HEADER = ["n", "re", "im"]
TRACE_HEADER = ["N", "re", "im"]
TECH_HEADER = ["h", "l1_norm", "exponent"]

def fmt(x: float) -> str:
    '''
    17 significant digits: parsing the text gives back the same double.
    '''
    return "%.17g" % x

class SeriesCodec:
    '''
    CSV text for series, traces and tech-lemma rows. UTF-8, LF endings.
    '''

    @staticmethod
    def _write(header: list[str], rows) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    @staticmethod
    def _read(text: str, header: list[str]) -> list[list[str]]:
        reader = csv.reader(io.StringIO(text))
        first = next(reader, None)
        if first != header:
            raise InvalidArgument(f"Invalid CSV header: {first}, expected {header}")
        return [row for row in reader if row]

    @staticmethod
    def series_to_csv(series: WeightSeries) -> str:
        return SeriesCodec._write(SERIES_HEADER, ([str(n), fmt(v.real), fmt(v.imag)]
                                                  for n, v in zip(series.indices(), series.values)))

    @staticmethod
    def series_from_csv(text: str, label: str = "input") -> WeightSeries:
        '''
        Indices must be consecutive.
        '''
        rows = SeriesCodec._read(text, SERIES_HEADER)
        if not rows:
            raise InvalidArgument("Invalid series CSV: no rows")
        n = np.array([int(r[0]) for r in rows], dtype=np.int64)
        if np.any(np.diff(n) != 1):
            raise InvalidArgument("Invalid series CSV: indices are not consecutive")
        values = np.array([float(r[1]) for r in rows]) + 1j * np.array([float(r[2]) for r in rows])
        return WeightSeries(label=label, start=int(n[0]), values=values)

    @staticmethod
    def trace_to_csv(trace: Trace) -> str:
        if trace.values.ndim != 1:
            raise InvalidArgument("Invalid trace for CSV: vector valued")
        return SeriesCodec._write(TRACE_HEADER, ([str(N), fmt(v.real), fmt(v.imag)]
                                                 for N, v in zip(trace.times, trace.values)))

    @staticmethod
    def trace_from_csv(text: str) -> Trace:
        rows = SeriesCodec._read(text, TRACE_HEADER)
        times = [int(r[0]) for r in rows]
        values = [complex(float(r[1]), float(r[2])) for r in rows]
        return Trace(times=times, values=values)

    @staticmethod
    def tech_rows_to_csv(rows, N: int) -> str:
        return SeriesCodec._write(TECH_HEADER, ([str(row.h), fmt(row.l1_norm), fmt(row.exponent(N))]
                                                for row in rows))

    @staticmethod
    def write(path: str, text: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)

    @staticmethod
    def read(path: str) -> str:
        with open(path, "r", encoding="utf-8", newline="") as f:
            return f.read()
