from .Records import (SliceRecord, SliceStatisticsRow, CoefficientRecord, GowersRecord, GowersComparison,
                      TechLemmaSummary, LepingleRecord, SpectrumRecord, GridRecord, SamplingRecord, EnergyRecord,
                      SpectraReport, JumpRecord, ErgodicDiagnostics, AcceptanceRow)
from .SeriesCodec import SeriesCodec

__all__ = ["SliceRecord", "SliceStatisticsRow", "CoefficientRecord", "GowersRecord", "GowersComparison",
           "TechLemmaSummary", "LepingleRecord", "SpectrumRecord", "GridRecord", "SamplingRecord",
           "EnergyRecord", "SpectraReport", "JumpRecord", "ErgodicDiagnostics",
           "AcceptanceRow", "SeriesCodec"]
