from dataclasses import dataclass

@dataclass(frozen=True)
class GowersResult:
    '''
    raw_power is ||f||^(2^s) over Z; normalized is ||f||_{U^s([N])}
    when a normalizing length was supplied.
    '''
    s: int
    raw_power: float
    normalized: float | None = None
    clamped: bool = False # a negative rounding residue was set to 0

    def norm(self) -> float:
        return self.raw_power ** (1.0 / (1 << self.s))

    def with_normalization(self, denominator_power: float) -> "GowersResult":
        exponent = 1.0 / (1 << self.s)
        return GowersResult(s=self.s, raw_power=self.raw_power,
                            normalized=self.raw_power ** exponent / denominator_power ** exponent,
                            clamped=self.clamped)

    def as_dict(self) -> dict:
        return {"s": self.s, "raw_power": self.raw_power, "normalized": self.normalized}
