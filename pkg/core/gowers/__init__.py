from .GowersResult import GowersResult
from .GowersNorm import GowersNorm

__all__ = ["GowersResult", "GowersNorm"]
