"""`encode`: information tuples in, codewords out, one per line."""
import logging
from typing import TextIO

import numpy as np

from core.errors import CodingError, MalformedInputError
from models.run_config import RunConfig

from api.common import code_for, header_lines, input_lines

logger = logging.getLogger(__name__)


def run(config: RunConfig, out: TextIO) -> int:
    code = code_for(config)
    width = code.k1 + code.k2
    logger.info(f"encode {code.describe()}: {width} information symbols per line")
    for line in header_lines(config):
        out.write(f"# {line}\n")
    bad = 0
    for number, text in input_lines(config.input_path):
        try:
            if len(text) != width or any(ch not in "0123" for ch in text):
                raise MalformedInputError(f"expected {width} symbols in 0..3, got {text!r}")
            word = code.encode(np.array([int(ch) for ch in text]))
        except CodingError as e:
            logger.error(f"line {number}: {e}")
            out.write(f"# line {number}: {e}\n")
            bad += 1
            continue
        out.write(f"{word}\n")
    return 1 if bad else 0
