"""Line-oriented input and output shared by the commands."""
import logging
import sys
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional, TextIO, Tuple

import numpy as np

from config.settings import get_settings
from core.errors import MalformedInputError
from core.z4 import Z4Vector
from models.run_config import RunConfig
from services.codes import Z4Code, build_code, kerdock

logger = logging.getLogger(__name__)
settings = get_settings()


def run_header(config: RunConfig, **extra) -> Dict[str, object]:
    """Library version, run parameters and seed, as every command records them."""
    header: Dict[str, object] = {"tool": settings.app_name, "version": settings.version, "command": config.command}
    for key in ("family", "m", "r", "suite"):
        value = getattr(config, key)
        if value is not None:
            header[key] = value
    header.update(extra)
    header["seed"] = config.seed
    return header


def header_lines(config: RunConfig, **extra) -> List[str]:
    header = run_header(config, **extra)
    params = " ".join(f"{k}={v}" for k, v in header.items() if k not in ("tool", "version"))
    return [f"{header['tool']} {header['version']}", params]


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as handle:
        yield handle


def input_lines(path: Optional[str]) -> Iterator[Tuple[int, str]]:
    """(line number, stripped text) for every non-blank line; '#' starts a comment."""
    handle = sys.stdin if path is None else open(path, encoding="utf-8")
    try:
        for number, raw in enumerate(handle, start=1):
            text = raw.split("#", 1)[0].strip()
            if text:
                yield number, text
    finally:
        if path is not None:
            handle.close()


def code_for(config: RunConfig) -> Z4Code:
    if config.family == "kerdock":
        return kerdock(config.m, allow_even=config.m % 2 == 0)
    return build_code(config.family, config.m, config.r)


def parse_symbols(text: str, length: int) -> Z4Vector:
    v = Z4Vector.parse(text)
    if len(v) != length:
        raise MalformedInputError(f"expected {length} symbols, got {len(v)}")
    return v


def parse_soft(text: str, length: int) -> np.ndarray:
    """Comma-separated 're,im' tokens separated by whitespace, one per coordinate."""
    tokens = text.split()
    if len(tokens) != length:
        raise MalformedInputError(f"expected {length} 're,im' values, got {len(tokens)}")
    values = np.empty(length, dtype=complex)
    for i, token in enumerate(tokens):
        parts = token.split(",")
        if len(parts) != 2:
            raise MalformedInputError(f"value {i} is not a 're,im' pair: {token!r}")
        try:
            values[i] = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise MalformedInputError(f"value {i} is not numeric: {token!r}")
    return values


def matrix_lines(rows: np.ndarray) -> list:
    return ["".join(str(int(c)) for c in row) for row in np.asarray(rows)]
