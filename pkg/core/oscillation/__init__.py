from .Trace import Trace
from .Variation import (variation, jump_count, jump_sup, lacunary_lipschitz, variation_power_many,
                        jump_count_many, jump_sup_many)
from .DyadicMartingale import dyadic_martingale, martingale_levels, LepingleCheck, LepingleRecord

__all__ = ["Trace", "variation", "jump_count", "jump_sup", "lacunary_lipschitz", "variation_power_many",
           "jump_count_many", "jump_sup_many", "dyadic_martingale", "martingale_levels", "LepingleCheck", "LepingleRecord"]
