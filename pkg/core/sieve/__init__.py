from .WeightSeries import WeightSeries
from .FactorSieve import FactorSieve
from .ArithmeticSeries import ArithmeticSeries

__all__ = ["WeightSeries", "FactorSieve", "ArithmeticSeries"]
