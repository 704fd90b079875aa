from pydantic_settings import BaseSettings
from typing import Dict
from functools import lru_cache


# Primitive binary polynomials, low-degree coefficient first.
DEFAULT_H2: Dict[int, str] = {
    2: "111",
    3: "1101",
    4: "11001",
    5: "101001",
    6: "1100001",
    7: "11000001",
    8: "101110001",
    9: "1000100001",
    10: "10010000001",
    11: "101000000001",
    12: "1100101000001",
    13: "11011000000001",
    14: "110000100010001",
    15: "1100000000000001",
}


class Settings(BaseSettings):
    app_name: str = "z4codes"
    version: str = "1.0.0"
    debug: bool = False

    # Logging
    log_level: str = "INFO"
    log_json: bool = True

    # Reproducibility
    default_seed: int = 2024

    # Resource caps
    enumeration_cap: int = 1 << 24
    syndrome_cap: int = 1 << 18
    max_ring_degree: int = 15
    chunk_size: int = 1 << 14

    # Worker pool
    workers: int = 1

    class Config:
        env_file = ".env"
        env_prefix = "Z4_"


@lru_cache()
def get_settings():
    return Settings()
