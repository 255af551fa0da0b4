from .ReducedFraction import ReducedFraction
from .FareySlice import FareySlice, DyadicFareySlice, slice_statistics, bounded_lcm
from .ExponentialSums import ExponentialSums, mobius, totient
from .MultiplicityCounter import MultiplicityCounter, MultiplicityResult

__all__ = ["ReducedFraction", "FareySlice", "DyadicFareySlice", "slice_statistics", "bounded_lcm",
           "ExponentialSums", "mobius", "totient", "MultiplicityCounter", "MultiplicityResult"]
