from typing import List, Optional

from pydantic import BaseModel, field_validator, model_validator

from config.settings import get_settings
from services.codes import FAMILIES

settings = get_settings()

SUITES = ("core", "rings", "kerdock", "preparata", "goethals", "graphs", "all")
COMMANDS = ("code", "encode", "decode", "transform", "verify", "simulate")


class RunConfig(BaseModel):
    command: str
    family: Optional[str] = None
    m: Optional[int] = None
    r: Optional[int] = None
    suite: Optional[str] = None
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    seed: int
    snr: List[float] = []
    trials: int = 1000
    workers: int = 1

    @field_validator("command")
    @classmethod
    def known_command(cls, v: str) -> str:
        if v not in COMMANDS:
            raise ValueError(f"unknown command {v!r}")
        return v

    @field_validator("family")
    @classmethod
    def known_family(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in FAMILIES:
            raise ValueError(f"unknown family {v!r}")
        return v

    @field_validator("m")
    @classmethod
    def m_in_range(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and not 2 <= v <= settings.max_ring_degree:
            raise ValueError(f"m must be in [2, {settings.max_ring_degree}]")
        return v

    @field_validator("trials", "workers")
    @classmethod
    def positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @model_validator(mode="after")
    def parameters_fit_command(self) -> "RunConfig":
        if self.command == "verify" and self.suite not in SUITES:
            raise ValueError(f"suite must be one of {', '.join(SUITES)}")
        if self.command in ("code", "encode", "decode", "simulate"):
            if self.family is None:
                raise ValueError(f"{self.command} needs --family")
            if self.family not in ("octacode", "generic") and self.m is None:
                raise ValueError(f"family {self.family} needs --m")
            if self.family in ("zrm", "qrm", "dg") and self.r is None:
                raise ValueError(f"family {self.family} needs --r")
        if self.command == "transform" and self.m is None:
            raise ValueError("transform needs --m")
        if self.command == "simulate":
            if self.family not in ("kerdock", "preparata", "octacode"):
                raise ValueError("simulate runs kerdock, octacode or preparata")
            if not self.snr:
                raise ValueError("simulate needs --snr")
        return self
