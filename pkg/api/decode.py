"""`decode`: one received word per line in, one JSON record per line out,
after a header record carrying the version, parameters and seed.

Preparata words are hard decisions (symbol strings). Kerdock and octacode
lines are soft: whitespace-separated "re,im" pairs, or a symbol string that
is mapped onto the QPSK points first.
"""
import json
import logging
from typing import Callable, Dict, TextIO

import numpy as np

from core.errors import CodingError, ParameterError
from core.ring import get_ring
from core.z4 import LEE_WEIGHTS, Z4Vector
from models.run_config import RunConfig
from services.decoders import batch_decode, kerdock_soft_decode, preparata_decode
from services.simulation import CONSTELLATION, hard_slice

from api.common import code_for, input_lines, parse_soft, parse_symbols, run_header

logger = logging.getLogger(__name__)

SOFT_FAMILIES = ("kerdock", "octacode")


def _hard_record(text: str, length: int) -> Dict:
    result = preparata_decode(parse_symbols(text, length))
    return {
        "status": result.status,
        "codeword": result.codeword,
        "errorPositions": result.error_positions,
        "errorValues": result.error_values,
        "score": None,
    }


def _soft_record(text: str, ring) -> Dict:
    length = ring.n + 1
    if "," in text:
        received = parse_soft(text, length)
    else:
        received = CONSTELLATION[parse_symbols(text, length).symbols]
    decision = kerdock_soft_decode(ring, received)
    decided = Z4Vector.parse(decision.codeword).symbols
    error = (hard_slice(received) - decided) % 4
    positions = np.flatnonzero(error).tolist()
    return {
        "status": "corrected" if positions else "no-error",
        "codeword": decision.codeword,
        "errorPositions": positions,
        "errorValues": error[positions].tolist(),
        "leeWeight": int(LEE_WEIGHTS[error].sum()),
        "score": decision.score,
    }


def decoder_for(config: RunConfig) -> Callable[[str], Dict]:
    code = code_for(config)
    if code.family == "preparata":
        return lambda text: _hard_record(text, code.length)
    if code.family in SOFT_FAMILIES:
        ring = get_ring(code.m)
        return lambda text: _soft_record(text, ring)
    raise ParameterError(f"no decoder for family {code.family!r}; use preparata, kerdock or octacode")


def run(config: RunConfig, out: TextIO) -> int:
    decode = decoder_for(config)
    lines = list(input_lines(config.input_path))
    logger.info(f"decode {config.family}(m={config.m}): {len(lines)} lines")

    def guarded(item):
        number, text = item
        try:
            return {"line": number, **decode(text)}
        except CodingError as e:
            logger.error(f"line {number}: {e}")
            return {"line": number, "status": "malformed", "message": str(e)}

    records = batch_decode(guarded, lines, config.workers)
    out.write(json.dumps({"header": run_header(config)}) + "\n")
    for record in records:
        out.write(json.dumps(record) + "\n")
    return 1 if any(r["status"] == "malformed" for r in records) else 0
