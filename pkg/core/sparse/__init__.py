from .PSSequence import PSSequence, sparse_count_table
from .SparseWeight import SparseWeight, FourierL1, ReparamResult, delta_h_fourier_l1, reparam_check
from .TechLemma import TechLemma, TechLemmaStats

__all__ = ["PSSequence", "sparse_count_table", "SparseWeight", "FourierL1", "ReparamResult",
           "delta_h_fourier_l1", "reparam_check", "TechLemma", "TechLemmaStats"]
