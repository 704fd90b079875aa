"""`code`: print generator and parity-check matrices of a family."""
import logging
from typing import TextIO

from models.run_config import RunConfig
from services.codes import kerdock_cyclic_generator, kerdock_polynomial

from api.common import code_for, header_lines, matrix_lines

logger = logging.getLogger(__name__)


def run(config: RunConfig, out: TextIO) -> int:
    code = code_for(config)
    logger.info(f"code {code.describe()}")
    lines = [f"# {line}" for line in header_lines(config)] + [
        f"family: {code.describe()}",
        f"length: {code.length}",
        f"type: {code.type_string}",
    ]
    if code.ring is not None:
        lines.append(f"h: {code.ring.polynomial()}")
    if code.family == "kerdock":
        lines.append(f"g: {''.join(str(int(c)) for c in kerdock_polynomial(code.m))}")
        lines.append("generator (trace form):")
        lines += matrix_lines(code.generator)
        lines.append("generator (cyclic form):")
        lines += matrix_lines(kerdock_cyclic_generator(code.m))
    else:
        lines.append("generator:")
        lines += matrix_lines(code.generator)
    lines.append("generator (standard form):")
    lines += matrix_lines(code.std_generator)
    lines.append("parity check:")
    lines += matrix_lines(code.parity_check)
    out.write("\n".join(lines) + "\n")
    return 0
