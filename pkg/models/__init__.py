from .base import Schema
from .results import (
    CheckReport,
    DecodeResult,
    DesignCheck,
    DrgParameters,
    GaussianInteger,
    SimulationPoint,
    SoftDecision,
    WeightDistribution,
)

__all__ = [
    "Schema",
    "CheckReport",
    "DecodeResult",
    "DesignCheck",
    "DrgParameters",
    "GaussianInteger",
    "SimulationPoint",
    "SoftDecision",
    "WeightDistribution",
]
