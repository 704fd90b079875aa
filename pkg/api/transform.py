"""`transform`: ℤ₄ words in, their ring transforms out as JSON arrays, one per line.

A word of length n is read as (c_0, …, c_{n−1}). A word of length n + 1 carries
the extended coordinate ∞ first, which the transform ignores.
"""
import logging
from typing import TextIO

from core.errors import CodingError, MalformedInputError
from core.ring import get_ring
from models.run_config import RunConfig
from services.transforms import ring_transform, spectrum_to_json

from api.common import header_lines, input_lines, parse_symbols

logger = logging.getLogger(__name__)


def run(config: RunConfig, out: TextIO) -> int:
    ring = get_ring(config.m)
    logger.info(f"transform over GR(4^{ring.m}): words of length {ring.n} or {ring.n + 1}")
    for line in header_lines(config):
        out.write(f"# {line}\n")
    bad = 0
    for number, text in input_lines(config.input_path):
        try:
            if len(text) not in (ring.n, ring.n + 1):
                raise MalformedInputError(f"expected {ring.n} or {ring.n + 1} symbols, got {len(text)}")
            word = parse_symbols(text, len(text)).symbols
            spectrum = ring_transform(ring, word[-ring.n:])
        except CodingError as e:
            logger.error(f"line {number}: {e}")
            out.write(f"# line {number}: {e}\n")
            bad += 1
            continue
        out.write(spectrum_to_json(spectrum) + "\n")
    return 1 if bad else 0
