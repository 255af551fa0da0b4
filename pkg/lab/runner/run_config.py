from pydantic import BaseModel, field_validator
from typing import Literal, Optional

SUBCOMMANDS = ("sieve", "arcs", "weight", "gowers", "ps", "osc", "spectra", "ergodic", "verify")

class RunConfig(BaseModel):
    '''
    Merged run parameters: flags over the --config file over config.yaml.
    '''
    model_config = {"extra": "ignore"}

    subcommand: Literal["sieve", "arcs", "weight", "gowers", "ps", "osc", "spectra", "ergodic", "verify"]
    n: Optional[int] = None
    q: Optional[int] = None
    i: Optional[int] = None
    c: float = 1.1
    s: int = 2
    r: float = 3.0
    delta: Optional[float] = None
    seed: int = 0
    threads: int = 1
    deterministic: bool = False
    out: Optional[str] = None
    input: Optional[str] = None
    model: str = "mangoldt"
    mode: Literal["slice", "cumulative", "dyadic"] = "slice"
    method: Literal["fft", "brute", "both"] = "fft"
    suite: Literal["fast", "full"] = "fast"
    system: Literal["rotation", "skew"] = "rotation"
    alpha: float = 0.41421356237309503
    lo: Optional[int] = None
    hi: Optional[int] = None
    trials: int = 1000
    h_samples: int = 256
    eps_prime: float = 0.05
    oversample: int = 8

    @field_validator('seed')
    @classmethod
    def check_seed(cls, v):
        if not 0 <= v < 1 << 64:
            raise ValueError(f"seed must fit in 64 bits, got {v}")
        return v

    @field_validator('threads', 'trials', 'h_samples')
    @classmethod
    def check_positive(cls, v):
        if v < 1:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator('s')
    @classmethod
    def check_order(cls, v):
        if v not in (1, 2, 3):
            raise ValueError(f"Gowers order must be 1, 2 or 3, got {v}")
        return v
