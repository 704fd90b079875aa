"""`simulate`: block and bit error rates over an SNR grid, as CSV."""
import logging
from typing import TextIO

from models.run_config import RunConfig
from services.simulation import simulate, to_csv

from api.common import header_lines

logger = logging.getLogger(__name__)


def run(config: RunConfig, out: TextIO) -> int:
    m = 3 if config.family == "octacode" else config.m
    logger.info(f"simulate {config.family}(m={m}) over {len(config.snr)} points, {config.trials} trials each")
    points = simulate(config.family, m, config.snr, config.trials, config.seed, config.workers)
    out.write(to_csv(points, header_lines(config, m=m, trials=config.trials)))
    return 0
