from typing import Dict, List, Literal, Optional

from .base import Schema

DecodeStatus = Literal["corrected", "no-error", "detected-uncorrectable"]


class DecodeResult(Schema):
    status: DecodeStatus
    codeword: Optional[str] = None
    error: Optional[str] = None
    error_positions: List[int] = []
    error_values: List[int] = []
    applied_weight: int = 0


class SoftDecision(Schema):
    # λ = ξ^r + 2ξ^s with None standing for ξ^∞ = 0
    r: Optional[int]
    s: Optional[int]
    delta: int
    lam: str
    codeword: str
    score: float


class GaussianInteger(Schema):
    real: int
    imag: int

    @property
    def norm(self) -> int:
        return self.real ** 2 + self.imag ** 2


class WeightDistribution(Schema):
    family: str
    metric: Literal["lee", "hamming"]
    length: int
    counts: Dict[int, int]
    source: Literal["enumeration", "macwilliams"] = "enumeration"

    @property
    def minimum_distance(self) -> int:
        return min(w for w, c in self.counts.items() if w and c)


class DesignCheck(Schema):
    t: int
    v: int
    k: int
    blocks: int
    lam: Optional[int]
    holds: bool
    witness: Optional[List[int]] = None


class DrgParameters(Schema):
    vertices: int
    diameter: int
    b: List[int]
    c: List[int]
    a: List[int]
    valencies: List[int]
    eigenmatrix: List[List[int]]


class CheckReport(Schema):
    name: str
    suite: str
    parameters: Dict[str, str] = {}
    expected: str
    computed: str
    passed: bool


class SimulationPoint(Schema):
    snr: float
    trials: int
    block_errors: int
    bit_errors: int
    bits: int

    @property
    def block_error_rate(self) -> float:
        return self.block_errors / self.trials

    @property
    def bit_error_rate(self) -> float:
        return self.bit_errors / self.bits if self.bits else 0.0
