"""QPSK over complex AWGN with Kerdock soft decoding or Preparata hard decoding."""
import csv
import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence

import numpy as np

from config.settings import get_settings
from core.errors import ParameterError
from core.ring import get_ring
from core.z4 import Z4Vector, gray_map_rows
from models import SimulationPoint
from services.codes import build_code, kerdock_codeword
from services.decoders import kerdock_soft_decode, preparata_decode

logger = logging.getLogger(__name__)
settings = get_settings()

# symbol c is sent as i^c
CONSTELLATION = np.array([1, 1j, -1, -1j])


def noise_sigma(snr_db: float) -> float:
    """Standard deviation per real dimension for unit symbol energy at Es/N0 = snr_db."""
    if math.isinf(snr_db) and snr_db > 0:
        return 0.0
    return math.sqrt(1.0 / (2.0 * 10.0 ** (snr_db / 10.0)))


def hard_slice(received: np.ndarray) -> np.ndarray:
    return np.round(np.angle(received) / (np.pi / 2)).astype(np.int64) % 4


def _bit_errors(sent: np.ndarray, decided: np.ndarray) -> int:
    return int(np.count_nonzero(gray_map_rows(sent) != gray_map_rows(decided)))


def _simulate_point(family: str, m: int, snr_db: float, trials: int, seed_seq: np.random.SeedSequence) -> SimulationPoint:
    rng = np.random.default_rng(seed_seq)
    sigma = noise_sigma(snr_db)
    block_errors = bit_errors = 0
    if family in ("kerdock", "octacode"):
        ring = get_ring(m)
        length = ring.n + 1
        for _ in range(trials):
            lam = ring.element(rng.integers(0, 4, size=ring.m))
            delta = int(rng.integers(0, 4))
            sent = kerdock_codeword(ring, lam, delta).symbols
            noise = sigma * (rng.standard_normal(length) + 1j * rng.standard_normal(length))
            decision = kerdock_soft_decode(ring, CONSTELLATION[sent] + noise)
            decided = Z4Vector.parse(decision.codeword).symbols
            if not np.array_equal(sent, decided):
                block_errors += 1
                bit_errors += _bit_errors(sent, decided)
    elif family == "preparata":
        code = build_code("preparata", m)
        length = code.length
        for _ in range(trials):
            info = np.concatenate([
                rng.integers(0, 4, size=code.k1),
                rng.integers(0, 2, size=code.k2),
            ])
            sent = code.encode(info).symbols
            noise = sigma * (rng.standard_normal(length) + 1j * rng.standard_normal(length))
            sliced = hard_slice(CONSTELLATION[sent] + noise)
            result = preparata_decode(Z4Vector(sliced))
            decided = sliced if result.codeword is None else Z4Vector.parse(result.codeword).symbols
            if not np.array_equal(sent, decided):
                block_errors += 1
                bit_errors += _bit_errors(sent, decided)
    else:
        raise ParameterError(f"cannot simulate family {family!r}")
    logger.debug(f"{family}(m={m}) at {snr_db} dB: {block_errors}/{trials} block errors")
    return SimulationPoint(
        snr=snr_db,
        trials=trials,
        block_errors=block_errors,
        bit_errors=bit_errors,
        bits=trials * 2 * length,
    )


def simulate(
    family: str,
    m: int,
    snr_grid: Sequence[float],
    trials: int,
    seed: int,
    workers: int = 1,
) -> List[SimulationPoint]:
    """Error rates over an SNR grid; every point draws from its own child seed."""
    if trials < 1:
        raise ParameterError("trials must be at least 1")
    if family == "octacode":
        m = 3
    children = np.random.SeedSequence(seed).spawn(len(snr_grid))
    jobs = [(family, m, float(snr), trials, child) for snr, child in zip(snr_grid, children)]
    if workers <= 1:
        return [_simulate_point(*job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: _simulate_point(*job), jobs))


def to_csv(points: Sequence[SimulationPoint], header_lines: Sequence[str] = ()) -> str:
    out = io.StringIO()
    for line in header_lines:
        out.write(f"# {line}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["snr", "blockErrorRate", "bitErrorRate"])
    for p in points:
        writer.writerow([f"{p.snr:g}", f"{p.block_error_rate:.6e}", f"{p.bit_error_rate:.6e}"])
    return out.getvalue()
