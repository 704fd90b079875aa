"""Transform-domain descriptions of the Preparata, Goethals and QRM codes.

Cyclic coordinates t = 0..n−1 carry c_t; the extra coordinate ∞ is passed
separately. The ring transform is ĉ(λ) = Σ c_t ξ^{λt} and the field transform
of a binary vector is ã(λ) = Σ a_t θ^{λt}. Field values are returned as the
integers of the ``galois`` field of the ring.
"""
import json
import logging
from typing import List, Optional, Tuple

import numpy as np

from core.errors import LengthMismatchError, MalformedInputError, ParameterError
from core.ring import GaloisRing, RingElement
from services.codes import binary_weight

logger = logging.getLogger(__name__)


def _cyclic(ring: GaloisRing, c, kind: str = "vector") -> np.ndarray:
    c = np.asarray(c, dtype=np.int64)
    if c.shape[-1] != ring.n:
        raise LengthMismatchError(f"{kind} needs {ring.n} cyclic coordinates, got {c.shape[-1]}")
    return c


# -- ring transform

def ring_coefficients(ring: GaloisRing, rows: np.ndarray, lam: int) -> np.ndarray:
    """ĉ(λ) for every row of an (N, n) array, as (N, m) additive coordinates."""
    rows = _cyclic(ring, np.atleast_2d(rows))
    idx = (lam * np.arange(ring.n)) % ring.n
    return rows @ ring.pow_table[idx] % 4


def ring_transform(ring: GaloisRing, c) -> List[RingElement]:
    c = _cyclic(ring, c)
    lam = np.arange(ring.n)
    idx = np.outer(lam, np.arange(ring.n)) % ring.n
    spectrum = np.einsum("t,ltk->lk", c, ring.pow_table[idx]) % 4
    return [RingElement(ring, row) for row in spectrum]


def inverse_ring_transform(ring: GaloisRing, spectrum: List[RingElement]) -> np.ndarray:
    """c_t = −Σ_λ ĉ(λ) ξ^{−λt}; the inverse of ring_transform."""
    if len(spectrum) != ring.n:
        raise LengthMismatchError(f"spectrum needs {ring.n} values, got {len(spectrum)}")
    coords = np.stack([s.coords for s in spectrum])
    n, m = ring.n, ring.m
    lam = np.arange(n)[:, None, None]
    t = np.arange(n)[None, :, None]
    i = np.arange(m)[None, None, :]
    table = ring.pow_table[(i - lam * t) % n]
    values = -np.einsum("li,ltik->tk", coords, table) % 4
    if values[:, 1:].any():
        raise ArithmeticError("inverse transform left ℤ₄")
    return values[:, 0]


def spectrum_to_json(spectrum: List[RingElement]) -> str:
    """JSON array of the coordinate strings of ĉ(0), …, ĉ(n−1)."""
    return json.dumps([str(s) for s in spectrum])


def spectrum_from_json(ring: GaloisRing, text: str) -> List[RingElement]:
    values = json.loads(text)
    if not isinstance(values, list):
        raise MalformedInputError("a spectrum is a JSON array of ring element strings")
    return [ring.element(str(v)) for v in values]


# -- field transform

def field_coefficients(ring: GaloisRing, rows: np.ndarray, lam: int) -> np.ndarray:
    """ã(λ) for every row of an (N, n) binary array, as field integers."""
    rows = _cyclic(ring, np.atleast_2d(rows)) % 2
    powers = ring.field_exp[(lam * np.arange(ring.n)) % ring.n]
    return np.bitwise_xor.reduce(rows * powers[None, :], axis=1)


def field_transform(ring: GaloisRing, a) -> np.ndarray:
    a = _cyclic(ring, a) % 2
    idx = np.outer(np.arange(ring.n), np.arange(ring.n)) % ring.n
    return np.bitwise_xor.reduce(a[None, :] * ring.field_exp[idx], axis=1)


def half_convolution(ring: GaloisRing, spectrum, lam: int):
    """Σ ã(λ₁)ã(λ₂) over unordered pairs λ₁ ≤ λ₂ with λ₁ + λ₂ ≡ λ (mod n).

    ``spectrum`` is a length-n array of field integers, or an (N, n) batch.
    """
    GF = ring.field
    spectra = GF(np.atleast_2d(np.asarray(spectrum, dtype=np.int64)))
    total = GF(np.zeros(spectra.shape[0], dtype=np.int64))
    for l1 in range(ring.n):
        l2 = (lam - l1) % ring.n
        if l1 <= l2:
            total = total + spectra[:, l1] * spectra[:, l2]
    out = total.view(np.ndarray).astype(np.int64)
    return out if np.ndim(spectrum) == 2 else int(out[0])


def half_convolution_via_ring(ring: GaloisRing, a, lam: int) -> int:
    """𝓗(ã, λ) read off the ring transform of a ∈ {0,1}ⁿ, â(λ) = e + 2f ↦ μ(f)."""
    a = _cyclic(ring, a) % 2
    coeff = RingElement(ring, ring_coefficients(ring, a, lam)[0])
    _, f = ring.two_adic(coeff)
    return int(ring.mu(f))


# -- Preparata

def preparata_member_z4_rows(ring: GaloisRing, words: np.ndarray) -> np.ndarray:
    """Rows (c_∞, c_0, …, c_{n−1}) with c_∞ + ĉ(0) = 0 and ĉ(1) = 0."""
    words = np.atleast_2d(np.asarray(words, dtype=np.int64)) % 4
    if words.shape[1] != ring.n + 1:
        raise LengthMismatchError(f"expected length {ring.n + 1}, got {words.shape[1]}")
    inf, body = words[:, 0], words[:, 1:]
    parity = (inf + body.sum(axis=1)) % 4 == 0
    return parity & ~ring_coefficients(ring, body, 1).any(axis=1)


def preparata_member_z4(ring: GaloisRing, c) -> bool:
    return bool(preparata_member_z4_rows(ring, c)[0])


def _binary_parts(ring: GaloisRing, b, ab):
    """Split (b | a+b) rows into a and b with their ∞ bits."""
    b = np.atleast_2d(np.asarray(b, dtype=np.int64)) % 2
    ab = np.atleast_2d(np.asarray(ab, dtype=np.int64)) % 2
    if b.shape != ab.shape or b.shape[1] != ring.n + 1:
        raise LengthMismatchError(f"both halves need length {ring.n + 1}")
    a = b ^ ab
    return a[:, 0], a[:, 1:], b[:, 0], b[:, 1:]


def preparata_member_binary_rows(ring: GaloisRing, b, ab) -> np.ndarray:
    """Membership of (b | a+b) in the binary image through the field transforms of a and b."""
    a_inf, a, b_inf, b_body = _binary_parts(ring, b, ab)
    a0 = field_coefficients(ring, a, 0)
    a1 = field_coefficients(ring, a, 1)
    b0 = field_coefficients(ring, b_body, 0)
    b1 = field_coefficients(ring, b_body, 1)
    spectra = np.stack([field_coefficients(ring, a, lam) for lam in range(ring.n)], axis=1)
    h0 = half_convolution(ring, spectra, 0)
    h1 = half_convolution(ring, spectra, 1)
    return (
        ((a0 ^ a_inf) == 0)
        & (a1 == 0)
        & ((b0 ^ b_inf) == (h0 ^ a_inf))
        & (b1 == h1)
    )


def preparata_member_binary(ring: GaloisRing, b, ab) -> bool:
    return bool(preparata_member_binary_rows(ring, b, ab)[0])


def preparata_member_classical_rows(ring: GaloisRing, b, ab) -> np.ndarray:
    """The classical binary description: ã(1) = 0, b̃(1)³ = ã(3) and both parities even."""
    a_inf, a, b_inf, b_body = _binary_parts(ring, b, ab)
    GF = ring.field
    a0 = field_coefficients(ring, a, 0)
    a1 = field_coefficients(ring, a, 1)
    a3 = field_coefficients(ring, a, 3)
    b0 = field_coefficients(ring, b_body, 0)
    b1 = GF(field_coefficients(ring, b_body, 1))
    cubes = (b1 ** 3).view(np.ndarray).astype(np.int64)
    return ((a0 ^ a_inf) == 0) & (a1 == 0) & ((b0 ^ b_inf) == 0) & (cubes == a3)


def preparata_member_classical(ring: GaloisRing, b, ab) -> bool:
    return bool(preparata_member_classical_rows(ring, b, ab)[0])


# -- Goethals and Delsarte-Goethals

def dg_transform_conditions(ring: GaloisRing, words: np.ndarray, r: int) -> np.ndarray:
    """Membership in DG(m, r)⊥: the Preparata conditions plus 2ĉ(1 + 2^j) = 0 for j ≤ r."""
    if r < 0 or r > (ring.m - 1) // 2:
        raise ParameterError(f"r must be in [0, {(ring.m - 1) // 2}], got {r}")
    words = np.atleast_2d(np.asarray(words, dtype=np.int64)) % 4
    ok = preparata_member_z4_rows(ring, words)
    for j in range(1, r + 1):
        coeff = ring_coefficients(ring, words[:, 1:], 1 + 2 ** j)
        ok &= ~(coeff % 2).any(axis=1)
    return ok


def goethals_member(ring: GaloisRing, c) -> bool:
    return bool(dg_transform_conditions(ring, c, 1)[0])


def goethals_member_binary_rows(ring: GaloisRing, b, ab, r: int = 1) -> np.ndarray:
    """Binary form: the Preparata conditions plus ã(1 + 2^i) = 0 for 1 ≤ i ≤ r."""
    ok = preparata_member_binary_rows(ring, b, ab)
    _, a, _, _ = _binary_parts(ring, b, ab)
    for i in range(1, r + 1):
        ok &= field_coefficients(ring, a, 1 + 2 ** i) == 0
    return ok


def goethals_member_binary(ring: GaloisRing, b, ab, r: int = 1) -> bool:
    return bool(goethals_member_binary_rows(ring, b, ab, r)[0])


def goethals_member_original_rows(ring: GaloisRing, b, ab) -> np.ndarray:
    """The nonlinear binary Goethals code: ã(r′) = b̃(1)^{r′} and ã(s) = b̃(1)^s.

    With t = (m − 1)/2 the exponents are r′ = 1 + 2^{t−1} and s = 1 + 2^t.
    """
    if ring.m % 2 == 0:
        raise ParameterError("the binary Goethals code needs odd m")
    t = (ring.m - 1) // 2
    r_exp, s_exp = 1 + 2 ** (t - 1), 1 + 2 ** t
    a_inf, a, b_inf, b_body = _binary_parts(ring, b, ab)
    GF = ring.field
    b1 = GF(field_coefficients(ring, b_body, 1))
    a0 = field_coefficients(ring, a, 0)
    a1 = field_coefficients(ring, a, 1)
    b0 = field_coefficients(ring, b_body, 0)
    ar = field_coefficients(ring, a, r_exp)
    as_ = field_coefficients(ring, a, s_exp)
    br = (b1 ** r_exp).view(np.ndarray).astype(np.int64)
    bs = (b1 ** s_exp).view(np.ndarray).astype(np.int64)
    return (
        ((a0 ^ a_inf) == 0)
        & (a1 == 0)
        & ((b0 ^ b_inf) == 0)
        & (ar == br)
        & (as_ == bs)
    )


def goethals_member_original(ring: GaloisRing, b, ab) -> bool:
    return bool(goethals_member_original_rows(ring, b, ab)[0])


# -- QRM

def qrm_spectral_rows(ring: GaloisRing, words: np.ndarray, r: int) -> np.ndarray:
    """QRM(r, m) by its zeros: c_∞ + ĉ(0) = 0 and ĉ(λ) = 0 for 1 ≤ λ < n with wt(λ) ≤ m − 1 − r."""
    words = np.atleast_2d(np.asarray(words, dtype=np.int64)) % 4
    if words.shape[1] != ring.n + 1:
        raise LengthMismatchError(f"expected length {ring.n + 1}, got {words.shape[1]}")
    bound = ring.m - 1 - r
    ok = np.ones(len(words), dtype=bool)
    if bound < 0:
        return ok
    ok &= (words[:, 0] + words[:, 1:].sum(axis=1)) % 4 == 0
    for lam in range(1, ring.n):
        if binary_weight(lam) <= bound:
            ok &= ~ring_coefficients(ring, words[:, 1:], lam).any(axis=1)
    return ok


def qrm_spectral_member(ring: GaloisRing, c, r: int) -> bool:
    return bool(qrm_spectral_rows(ring, c, r)[0])


def split_binary(bits) -> tuple:
    """(b | a+b) halves of a Gray image."""
    bits = np.asarray(bits, dtype=np.int64)
    half = bits.shape[-1] // 2
    return bits[..., :half], bits[..., half:]


def unit_character_sum(ring: GaloisRing) -> Tuple[int, int]:
    """Σ over the units ν of i^{T(ν)}, as exact (real, imaginary) parts."""
    counts = np.zeros(4, dtype=np.int64)
    for r in range(ring.n):
        for t in ring.teichmuller():
            counts[ring.trace(ring.mul_xi(ring.one() + 2 * t, r))] += 1
    return int(counts[0] - counts[2]), int(counts[1] - counts[3])
