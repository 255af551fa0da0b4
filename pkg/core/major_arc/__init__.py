from .PhaseTable import PhaseTable
from .ArcModel import ArcModel, EULER_GAMMA, divisor_coefficient
from .MajorArcWeight import MajorArcWeight, SLICE, CUMULATIVE, DYADIC
from .DivisorArcs import DivisorArcs
from .TwoSquaresSplit import TwoSquaresSplit
from .Admissibility import Admissibility, MomentResult, ResidualRow

__all__ = ["PhaseTable", "ArcModel", "EULER_GAMMA", "divisor_coefficient", "MajorArcWeight",
           "SLICE", "CUMULATIVE", "DYADIC", "DivisorArcs", "TwoSquaresSplit",
           "Admissibility", "MomentResult", "ResidualRow"]
