from .DynamicalSystem import DynamicalSystem, TorusPoint, character, to_fixed, to_float, DEFAULT_ALPHA
from .Observable import Observable
from .BilinearAverage import (AverageTrace, bilinear_average, integer_model_average, average_trace,
                              average_traces, lacunary_grid, sparse_bilinear_average, orbit_products)
from .PrimeAverages import PrimeComparison, prime_vs_mangoldt

__all__ = ["DynamicalSystem", "TorusPoint", "character", "to_fixed", "to_float", "DEFAULT_ALPHA", "Observable",
           "AverageTrace", "bilinear_average", "integer_model_average", "average_trace", "average_traces",
           "lacunary_grid", "sparse_bilinear_average", "orbit_products", "PrimeComparison", "prime_vs_mangoldt"]
