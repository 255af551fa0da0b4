from pydantic import BaseModel, Field, field_validator
from typing import Literal, Optional

'''
Pydantic schemas for every JSON record the lab emits
'''

class SliceRecord(BaseModel):
    Q: int
    i: Optional[int] = None
    fractions: list[tuple[int, int]]
    lcm: str # decimal string, may exceed 64 bits

    @field_validator('lcm', mode='before')
    @classmethod
    def stringify_lcm(cls, v):
        return str(v)

class SliceStatisticsRow(BaseModel):
    i: int
    size: int
    lcm_digits: int
    size_bound_ok: bool
    lcm_bound_ok: bool

class CoefficientRecord(BaseModel):
    a: int
    q: int
    re: float
    im: float

class GowersRecord(BaseModel):
    s: int
    raw_power: float
    normalized: Optional[float] = None
    method: Literal["fft", "brute"] = "fft"

class GowersComparison(BaseModel):
    s: int
    brute: GowersRecord
    fft: GowersRecord
    relative_gap: float

class TechLemmaSummary(BaseModel):
    c: float
    N: int
    samples: int
    max_exponent: float
    bad_fraction: float
    eps_prime: float
    bound_violations: int = 0

class LepingleRecord(BaseModel):
    r: float
    trials: int
    max_ratio: float
    max_jump_ratio: Optional[float] = None
    length: Optional[int] = None
    signal: Literal["rademacher", "gaussian"] = "rademacher"

    @field_validator('r')
    @classmethod
    def check_exponent(cls, v):
        if v <= 2:
            raise ValueError(f"r must exceed 2, got {v}")
        return v

class SpectrumRecord(BaseModel):
    interval: tuple[int, int]
    delta: float
    freqs: list[int]

class GridRecord(BaseModel):
    K0: int
    Delta: int
    L: int
    intervals: int
    nesting_violations: int

class SamplingRecord(BaseModel):
    N: int
    delta: float
    count: int
    bound_ratio: float # |Lambda| delta^2

class EnergyRecord(BaseModel):
    M0: int
    R: int
    scales: list[int]
    total: float
    ratio: float

class SpectraReport(SpectrumRecord):
    '''
    The spectrum plus the projection, grid, sampling and packet checks
    run on the same interval. Checks that do not apply are null.
    '''
    projection_sup: float # sup |Pi_I g| / |Lambda|^(1/2)
    grid: GridRecord
    sampling: Optional[SamplingRecord] = None
    energy: Optional[EnergyRecord] = None

class JumpRecord(BaseModel):
    model_config = {"populate_by_name": True}
    lam: float = Field(alias="lambda")
    count: int

class ErgodicDiagnostics(BaseModel):
    v2: float
    jumps: JumpRecord
    final: tuple[float, float] # (re, im) of the last trace value

class AcceptanceRow(BaseModel):
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float
