"""Hard-decision Preparata decoding and soft-decision Kerdock decoding.

Coordinates follow the extended cyclic order (∞, 0, …, n−1); position 0 of
every vector is ∞.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from config.settings import get_settings
from core.errors import LengthMismatchError, ParameterError
from core.ring import GaloisRing, RingElement, get_ring
from core.z4 import LEE_WEIGHTS, Z4Vector
from models import DecodeResult, GaussianInteger, SoftDecision
from services.codes import kerdock_codeword

logger = logging.getLogger(__name__)
settings = get_settings()

# i^{−k} for k = 0..3
INVERSE_PHASES = np.array([1, -1j, -1, 1j])

T = TypeVar("T")
R = TypeVar("R")


def _ring_for_length(length: int) -> GaloisRing:
    m = length.bit_length() - 1
    if length < 4 or 1 << m != length:
        raise LengthMismatchError(f"length must be a power of two, got {length}")
    if m % 2 == 0:
        raise ParameterError(f"the Preparata decoder needs odd m, got m={m}")
    return get_ring(m)


def _syndrome(ring: GaloisRing, symbols: np.ndarray) -> Tuple[int, RingElement]:
    """(Σ v_j, Σ v_j ξ^j) with ∞ contributing ξ^∞ = 0 to the second sum."""
    total = int(symbols.sum() % 4)
    return total, RingElement(ring, symbols[1:] @ ring.pow_table % 4)


def _position(ring: GaloisRing, x) -> int:
    """Coordinate index of a field element: 0 for ∞ (x = 0), else log θ(x) + 1."""
    k = ring.field_log_of(x)
    return 0 if k is None else k + 1


def _locate(ring: GaloisRing, total: int, syndrome: RingElement) -> Dict[int, int]:
    big_a, big_b = ring.two_adic(syndrome)
    a, b = ring.mu(big_a), ring.mu(big_b)
    if total == 1 and big_b.is_zero():
        return {_position(ring, a): 1}
    if total == 3 and big_a == big_b:
        return {_position(ring, a): 3}
    if total == 2 and big_a.is_zero():
        return {_position(ring, b): 2}
    if total == 0 and not big_a.is_zero():
        y = b * b / a
        x = a + y
        return {_position(ring, x): 1, _position(ring, y): 3}
    if total == 2:
        if ring.trace_field(b / a) == 0:
            roots, value = ring.solve_artin_schreier(a, b * b), 1
        else:
            roots, value = ring.solve_artin_schreier(a, a * a + b * b), 3
        if len(roots) == 2:
            return {_position(ring, u): value for u in roots}
    return {}


def preparata_decode(v: Z4Vector) -> DecodeResult:
    """Correct every error pattern of Lee weight at most 2 in a received word of 𝒫(m)."""
    ring = _ring_for_length(len(v))
    symbols = v.symbols
    total, syndrome = _syndrome(ring, symbols)
    if total == 0 and syndrome.is_zero():
        return DecodeResult(status="no-error", codeword=str(v), error="0" * len(v))

    errors = _locate(ring, total, syndrome)
    if errors:
        e = np.zeros(len(v), dtype=np.int64)
        for pos, value in errors.items():
            e[pos] = value
        corrected = (symbols - e) % 4
        check_total, check = _syndrome(ring, corrected)
        if check_total == 0 and check.is_zero():
            positions = sorted(errors)
            return DecodeResult(
                status="corrected",
                codeword="".join(str(int(c)) for c in corrected),
                error="".join(str(int(c)) for c in e),
                error_positions=positions,
                error_values=[errors[p] for p in positions],
                applied_weight=int(LEE_WEIGHTS[e].sum()),
            )
        logger.debug(f"candidate correction {errors} left a nonzero syndrome")
    return DecodeResult(status="detected-uncorrectable")


# -- soft decision

def fht(values) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform, Ŵ[u] = Σ_x W[x](−1)^{u·x}."""
    x = np.array(values, dtype=complex)
    n = len(x)
    if n == 0 or n & (n - 1):
        raise ParameterError(f"transform length must be a power of two, got {n}")
    h = 1
    while h < n:
        y = x.reshape(-1, 2, h)
        top = y[:, 0, :].copy()
        y[:, 0, :] += y[:, 1, :]
        y[:, 1, :] = top - y[:, 1, :]
        x = y.reshape(n)
        h *= 2
    return x


def _soft_tables(ring: GaloisRing) -> Tuple[np.ndarray, np.ndarray]:
    """Field integer of each coordinate, and the Hadamard index u(s) for s = ∞, 0, …, n−1."""
    points = np.concatenate([[0], ring.field_exp])
    tr_bits = ring.trace_table % 2
    weights = 1 << np.arange(ring.m)
    u = np.zeros(ring.n + 1, dtype=np.int64)
    for j in range(ring.n):
        u[j + 1] = int(tr_bits[(j + np.arange(ring.m)) % ring.n] @ weights)
    return points, u


def soft_scores(ring: GaloisRing, received) -> np.ndarray:
    """Re ζ(λ, δ) for every candidate, shaped (r, s, δ) with index 0 standing for ∞."""
    s = np.asarray(received, dtype=complex)
    length = ring.n + 1
    if s.shape != (length,):
        raise LengthMismatchError(f"expected {length} received values, got {s.shape}")
    points, u = _soft_tables(ring)
    scores = np.empty((length, length, 4))
    for ri in range(length):
        rot = np.zeros(length, dtype=np.int64)
        if ri:
            rot[1:] = ring.trace_table[(np.arange(ring.n) + ri - 1) % ring.n]
        w = np.zeros(length, dtype=complex)
        w[points] = s * INVERSE_PHASES[rot]
        z = fht(w)[u]
        scores[ri, :, 0] = z.real
        scores[ri, :, 1] = z.imag
        scores[ri, :, 2] = -z.real
        scores[ri, :, 3] = -z.imag
    return scores


def _decision(ring: GaloisRing, ri: int, si: int, delta: int, score: float) -> SoftDecision:
    r = None if ri == 0 else ri - 1
    s = None if si == 0 else si - 1
    lam = ring.xi(r) + 2 * ring.xi(s)
    return SoftDecision(
        r=r,
        s=s,
        delta=delta,
        lam=str(lam),
        codeword=str(kerdock_codeword(ring, lam, delta)),
        score=float(score),
    )


def kerdock_soft_decode(ring: GaloisRing, received) -> SoftDecision:
    """Maximum-correlation Kerdock codeword via 2^m fast Hadamard transforms.

    Ties go to the first candidate in (r, s, δ) order with ∞ before 0.
    """
    scores = soft_scores(ring, received)
    ri, si, delta = np.unravel_index(int(np.argmax(scores)), scores.shape)
    return _decision(ring, int(ri), int(si), int(delta), scores[ri, si, delta])


def kerdock_candidates(ring: GaloisRing) -> np.ndarray:
    """All Kerdock codewords in (r, s, δ) order, one row each."""
    length = ring.n + 1
    rows = []
    for ri in range(length):
        for si in range(length):
            lam = ring.xi(None if ri == 0 else ri - 1) + 2 * ring.xi(None if si == 0 else si - 1)
            for delta in range(4):
                rows.append(kerdock_codeword(ring, lam, delta).symbols)
    return np.array(rows, dtype=np.int64)


def kerdock_soft_decode_brute(ring: GaloisRing, received, candidates: Optional[np.ndarray] = None) -> SoftDecision:
    """Correlate against every codeword; the reference for kerdock_soft_decode."""
    s = np.asarray(received, dtype=complex)
    if candidates is None:
        candidates = kerdock_candidates(ring)
    scores = (INVERSE_PHASES[candidates] @ s).real
    best = int(np.argmax(scores))
    ri, rest = divmod(best, 4 * (ring.n + 1))
    si, delta = divmod(rest, 4)
    return _decision(ring, ri, si, delta, scores[best])


def correlation(a, b) -> GaussianInteger:
    """Σ_t i^{a_t − b_t}."""
    a = a.symbols if isinstance(a, Z4Vector) else np.asarray(a, dtype=np.int64)
    b = b.symbols if isinstance(b, Z4Vector) else np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise LengthMismatchError(f"lengths differ: {a.shape} != {b.shape}")
    counts = np.bincount((a - b) % 4, minlength=4)
    return GaussianInteger(real=int(counts[0] - counts[2]), imag=int(counts[1] - counts[3]))


def family_a_correlations(ring: GaloisRing) -> List[int]:
    """|1 + Σ_t i^{T(λξ^t)}|² for every unit λ."""
    norms = []
    for lam in ring.units():
        body = kerdock_codeword(ring, lam, 0).symbols[1:]
        z = correlation(body, np.zeros_like(body))
        norms.append((z.real + 1) ** 2 + z.imag ** 2)
    return norms


# -- oracles and batching

def brute_force_nearest(codewords: np.ndarray, v) -> Tuple[int, np.ndarray]:
    """Minimum Lee distance from v to a list of codewords, and the indices attaining it."""
    symbols = v.symbols if isinstance(v, Z4Vector) else np.asarray(v, dtype=np.int64)
    distances = LEE_WEIGHTS[(np.asarray(codewords) - symbols[None, :]) % 4].sum(axis=1)
    best = int(distances.min())
    return best, np.flatnonzero(distances == best)


def batch_decode(decode: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Decode independent inputs on a thread pool; results keep the input order."""
    workers = workers or settings.workers
    if workers <= 1:
        return [decode(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(decode, items))
