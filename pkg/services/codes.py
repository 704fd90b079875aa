"""Quaternary linear codes and the families built on the Galois ring.

Extended cyclic codes index their coordinates (∞, 0, 1, …, n−1).
"""
import itertools
import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

import galois
import numpy as np

from config.settings import get_settings
from core import z4poly
from core.errors import LengthMismatchError, MalformedInputError, ParameterError, ResourceCapError
from core.ring import GaloisRing, get_ring
from core.z4 import Z4Vector

logger = logging.getLogger(__name__)
settings = get_settings()

GF2 = galois.GF(2)

FAMILIES = ("kerdock", "preparata", "octacode", "zrm", "qrm", "dg", "goethals", "generic")
_DUAL_FAMILIES = {
    "kerdock": "preparata",
    "preparata": "kerdock",
    "octacode": "octacode",
    "qrm": "qrm",
    "dg": "goethals",
    "goethals": "dg",
}


def _standard_form(generator: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int, int]:
    """Row reduce to [[I, A, B], [0, 2I, 2C]] up to a column permutation.

    Returns the reduced rows in permuted coordinates, the permutation, k₁ and k₂.
    Column j of the reduced matrix is original column perm[j].
    """
    M = np.asarray(generator, dtype=np.int64).copy() % 4
    rows, n = M.shape
    perm = np.arange(n)
    k1 = 0
    while k1 < rows:
        pos = np.argwhere(M[k1:, k1:] % 2 == 1)
        if len(pos) == 0:
            break
        i, j = pos[0][0] + k1, pos[0][1] + k1
        M[[k1, i]] = M[[i, k1]]
        M[:, [k1, j]] = M[:, [j, k1]]
        perm[[k1, j]] = perm[[j, k1]]
        if M[k1, k1] == 3:
            M[k1] = (3 * M[k1]) % 4
        factors = M[:, k1].copy()
        factors[k1] = 0
        M = (M - np.outer(factors, M[k1])) % 4
        k1 += 1

    k2 = 0
    while k1 + k2 < rows:
        top = k1 + k2
        pos = np.argwhere(M[top:, top:] == 2)
        if len(pos) == 0:
            break
        i, j = pos[0][0] + top, pos[0][1] + top
        M[[top, i]] = M[[i, top]]
        M[:, [top, j]] = M[:, [j, top]]
        perm[[top, j]] = perm[[j, top]]
        for r in range(rows):
            if r != top and M[r, top] >= 2:
                M[r] = (M[r] - M[top]) % 4
        k2 += 1

    return M[: k1 + k2], perm, k1, k2


class Z4Code:
    def __init__(
        self,
        generator,
        family: str = "generic",
        m: Optional[int] = None,
        r: Optional[int] = None,
        ring: Optional[GaloisRing] = None,
        length: Optional[int] = None,
    ):
        gen = np.asarray(generator, dtype=np.int64)
        if gen.size == 0:
            if length is None:
                raise ParameterError("an empty generator needs an explicit length")
            gen = np.zeros((0, length), dtype=np.int64)
        gen = np.atleast_2d(gen) % 4
        if family not in FAMILIES:
            raise ParameterError(f"unknown family {family!r}")

        self.generator = gen
        self.generator.setflags(write=False)
        self.length = gen.shape[1]
        self.family = family
        self.m = m
        self.r = r
        self.ring = ring

        reduced, perm, k1, k2 = _standard_form(gen)
        self.k1 = k1
        self.k2 = k2
        self.perm = perm
        self._reduced = reduced
        self.std_generator = np.zeros_like(reduced)
        self.std_generator[:, perm] = reduced
        self._parity_check: Optional[np.ndarray] = None
        logger.debug(f"{self.describe()}: type {self.type_string}")

    # -- shape

    @property
    def type_string(self) -> str:
        return f"4^{self.k1} 2^{self.k2}"

    @property
    def size(self) -> int:
        return 4 ** self.k1 * 2 ** self.k2

    def describe(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in (("m", self.m), ("r", self.r)) if v is not None)
        return f"{self.family}({params})" if params else self.family

    # -- encoding and membership

    def encode(self, u) -> Z4Vector:
        u = np.asarray(u, dtype=np.int64)
        if u.shape != (self.k1 + self.k2,):
            raise MalformedInputError(f"information tuple needs {self.k1 + self.k2} symbols")
        u1, u2 = u[: self.k1], u[self.k1 :]
        if np.any((u1 < 0) | (u1 > 3)):
            raise MalformedInputError("quaternary information symbols must lie in {0,1,2,3}")
        if np.any((u2 != 0) & (u2 != 1)):
            raise MalformedInputError("binary information symbols must be 0 or 1")
        return Z4Vector(u @ self.std_generator % 4)

    def encode_rows(self, info: np.ndarray) -> np.ndarray:
        return np.asarray(info, dtype=np.int64) @ self.std_generator % 4

    def contains_rows(self, words: np.ndarray) -> np.ndarray:
        words = np.atleast_2d(np.asarray(words, dtype=np.int64)) % 4
        if words.shape[1] != self.length:
            raise LengthMismatchError(f"expected length {self.length}, got {words.shape[1]}")
        vp = words[:, self.perm]
        k1, k2 = self.k1, self.k2
        rest = (vp - vp[:, :k1] @ self._reduced[:k1]) % 4
        seg = rest[:, k1 : k1 + k2]
        ok = ~np.any(seg % 2 == 1, axis=1)
        rest = (rest - (seg // 2) @ self._reduced[k1:]) % 4
        return ok & ~rest.any(axis=1)

    def contains(self, v) -> bool:
        symbols = v.symbols if isinstance(v, Z4Vector) else v
        return bool(self.contains_rows(symbols)[0])

    @property
    def parity_check(self) -> np.ndarray:
        """Generator of the dual code, in the shape [[−Bᵀ−CᵀAᵀ, Cᵀ, I], [2Aᵀ, 2I, 0]]."""
        if self._parity_check is None:
            k1, k2, n = self.k1, self.k2, self.length
            A = self._reduced[:k1, k1 : k1 + k2]
            B = self._reduced[:k1, k1 + k2 :]
            C = self._reduced[k1 : k1 + k2, k1 + k2 :] // 2
            rest = n - k1 - k2
            upper = np.concatenate(
                [(-B.T - C.T @ A.T) % 4, C.T, np.eye(rest, dtype=np.int64)], axis=1
            )
            lower = np.concatenate(
                [2 * A.T, 2 * np.eye(k2, dtype=np.int64), np.zeros((k2, rest), dtype=np.int64)], axis=1
            )
            permuted = np.concatenate([upper, lower], axis=0).reshape(-1, n) % 4
            H = np.zeros_like(permuted)
            H[:, self.perm] = permuted
            self._parity_check = H
        return self._parity_check

    def syndrome_rows(self, words: np.ndarray) -> np.ndarray:
        return np.atleast_2d(np.asarray(words, dtype=np.int64)) @ self.parity_check.T % 4

    def syndrome(self, v) -> Z4Vector:
        symbols = v.symbols if isinstance(v, Z4Vector) else v
        return Z4Vector(self.syndrome_rows(symbols)[0])

    # -- enumeration

    def info_rows(self, start: int, stop: int) -> np.ndarray:
        """Information tuples with indices in [start, stop), quaternary digits first."""
        idx = np.arange(start, stop, dtype=np.int64)
        cols = []
        for i in range(self.k1):
            cols.append((idx >> (2 * (self.k1 - 1 - i) + self.k2)) & 3)
        for i in range(self.k2):
            cols.append((idx >> (self.k2 - 1 - i)) & 1)
        if not cols:
            return np.zeros((len(idx), 0), dtype=np.int64)
        return np.stack(cols, axis=1)

    def iter_codewords(self, chunk: Optional[int] = None, start: int = 0, stop: Optional[int] = None) -> Iterator[np.ndarray]:
        """Blocks of codewords in information-tuple order; [start, stop) splits the scan."""
        if self.size > settings.enumeration_cap:
            raise ResourceCapError(f"{self.describe()} has {self.size} words, over the cap {settings.enumeration_cap}")
        chunk = chunk or settings.chunk_size
        stop = self.size if stop is None else stop
        for lo in range(start, stop, chunk):
            yield self.encode_rows(self.info_rows(lo, min(lo + chunk, stop)))

    def codewords(self) -> np.ndarray:
        return np.concatenate(list(self.iter_codewords()), axis=0)

    def dual(self) -> "Z4Code":
        """C⊥ from the parity-check matrix, tagged with the dual family where one is known."""
        family, r = _DUAL_FAMILIES.get(self.family, "generic"), None
        if self.family == "qrm":
            r = self.m - self.r - 1
        elif self.family == "dg" and self.r != 1:
            family = "generic"
        elif self.family == "goethals":
            r = 1
        return Z4Code(self.parity_check, family=family, m=self.m, r=r, ring=self.ring, length=self.length)

    # -- associated binary codes

    def residue_code(self) -> np.ndarray:
        """Generator of C⁽¹⁾ = α(C)."""
        return (self.std_generator[: self.k1] % 2).astype(np.uint8)

    def torsion_code(self) -> np.ndarray:
        """Generator of C⁽²⁾ = {β(c) : α(c) = 0}."""
        return np.concatenate(
            [self.std_generator[: self.k1] % 2, self.std_generator[self.k1 :] // 2], axis=0
        ).astype(np.uint8)

    def __repr__(self) -> str:
        return f"Z4Code({self.describe()}, length={self.length}, type={self.type_string})"


def same_code(a: Z4Code, b: Z4Code) -> bool:
    if a.length != b.length or (a.k1, a.k2) != (b.k1, b.k2):
        return False
    return bool(a.contains_rows(b.generator).all()) if len(b.generator) else True


# -- binary helpers

def binary_rank(rows: np.ndarray) -> int:
    rows = np.asarray(rows, dtype=np.int64) % 2
    if rows.size == 0:
        return 0
    return int(np.linalg.matrix_rank(GF2(rows)))


def same_binary_code(g1: np.ndarray, g2: np.ndarray) -> bool:
    r1, r2 = binary_rank(g1), binary_rank(g2)
    return r1 == r2 == binary_rank(np.concatenate([g1, g2], axis=0))


def binary_codewords(generator: np.ndarray) -> np.ndarray:
    reduced = GF2(np.asarray(generator, dtype=np.int64) % 2).row_reduce()
    basis = reduced.view(np.ndarray).astype(np.int64)
    basis = basis[basis.any(axis=1)]
    k = len(basis)
    idx = np.arange(2 ** k, dtype=np.int64)
    info = (idx[:, None] >> np.arange(k - 1, -1, -1)) & 1
    return (info @ basis % 2).astype(np.uint8)


def boolean_points(m: int, order: str = "natural", ring: Optional[GaloisRing] = None) -> np.ndarray:
    """Coordinates of the 2^m evaluation points, one row per code coordinate."""
    if order == "natural":
        p = np.arange(2 ** m)
        return ((p[:, None] >> np.arange(m - 1, -1, -1)) & 1).astype(np.int64)
    if order == "cyclic":
        ring = ring or get_ring(m)
        return np.concatenate([np.zeros((1, m), dtype=np.int64), ring.pow_table % 2], axis=0)
    raise ParameterError(f"unknown coordinate order {order!r}")


def monomials(m: int, degree: int) -> List[Tuple[int, ...]]:
    return list(itertools.combinations(range(m), degree))


def evaluate_monomial(points: np.ndarray, mono: Tuple[int, ...]) -> np.ndarray:
    row = np.ones(len(points), dtype=np.int64)
    for i in mono:
        row = row * points[:, i]
    return row


def rm_generator(r: int, m: int, order: str = "natural", ring: Optional[GaloisRing] = None) -> np.ndarray:
    """Binary RM(r, m) from the Boolean monomials of degree at most r."""
    points = boolean_points(m, order, ring)
    rows = [
        evaluate_monomial(points, mono)
        for d in range(0, min(r, m) + 1)
        for mono in monomials(m, d)
    ]
    if not rows:
        return np.zeros((0, 2 ** m), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


def zrm(r: int, k: int, order: str = "natural") -> Z4Code:
    """ZRM(r, k): generated by RM(r−1, k) and 2·RM(r, k), length 2^k."""
    if r < 0 or r > k + 1:
        raise ParameterError(f"r must be in [0, {k + 1}], got {r}")
    ring = get_ring(k) if order == "cyclic" else None
    points = boolean_points(k, order, ring)
    rows = [evaluate_monomial(points, mono) for d in range(0, r) for mono in monomials(k, d)]
    rows += [2 * evaluate_monomial(points, mono) for mono in monomials(k, r)]
    if r not in (0, 1, 2, k, k + 1):
        logger.warning(f"ZRM({r},{k}): Gray image is not known to be a Reed-Muller code")
    return Z4Code(np.array(rows, dtype=np.int64).reshape(-1, 2 ** k), family="zrm", m=k, r=r, ring=ring, length=2 ** k)


# -- Kerdock and Preparata

def _check_m(m: int, odd: bool = True) -> None:
    if m < 2 or m > settings.max_ring_degree:
        raise ParameterError(f"m must be in [2, {settings.max_ring_degree}], got {m}")
    if odd and m % 2 == 0:
        raise ParameterError(f"m must be odd, got {m}")


def cyclic_rows(poly: np.ndarray, n: int, count: int) -> np.ndarray:
    """Shifts of a cyclic generator polynomial, extended at ∞ by −poly(1)."""
    deg = len(poly) - 1
    rows = np.zeros((count, n + 1), dtype=np.int64)
    for i in range(count):
        rows[i, 1 + i : 2 + i + deg] = poly
        rows[i, 0] = (-int(poly.sum())) % 4
    return rows


def kerdock_polynomial(m: int, monic: bool = True) -> np.ndarray:
    """g: the reciprocal of (X^n − 1)/((X − 1)h(X)), monic by default."""
    ring = get_ring(m)
    divisor = z4poly.poly_mul(np.array([3, 1], dtype=np.int64), ring.h)
    quot, rem = z4poly.poly_divmod(z4poly.x_power_minus_one(ring.n), divisor)
    if z4poly.degree(rem) >= 0:
        raise ArithmeticError("(X - 1)h(X) does not divide X^n - 1")
    return z4poly.reciprocal(quot, monic=monic)


def kerdock_cyclic_generator(m: int) -> np.ndarray:
    ring = get_ring(m)
    return cyclic_rows(kerdock_polynomial(m), ring.n, m + 1)


def preparata_cyclic_generator(m: int) -> np.ndarray:
    ring = get_ring(m)
    return cyclic_rows(ring.h, ring.n, ring.n - m)


def kerdock_trace_generator(m: int) -> np.ndarray:
    """All-ones row over the additive coordinate rows of ξ^t, ∞ first."""
    ring = get_ring(m)
    ones = np.ones((1, ring.n + 1), dtype=np.int64)
    coords = np.concatenate([np.zeros((m, 1), dtype=np.int64), ring.pow_table.T], axis=1)
    return np.concatenate([ones, coords], axis=0)


@lru_cache()
def kerdock(m: int, allow_even: bool = False) -> Z4Code:
    _check_m(m, odd=not allow_even)
    ring = get_ring(m)
    code = Z4Code(kerdock_trace_generator(m), family="kerdock", m=m, ring=ring)
    cyclic = Z4Code(kerdock_cyclic_generator(m), ring=ring)
    if not same_code(code, cyclic):
        raise ArithmeticError(f"the two Kerdock generators disagree at m={m}")
    if (code.k1, code.k2) != (m + 1, 0):
        raise ArithmeticError(f"Kerdock code has type {code.type_string}")
    return code


@lru_cache()
def preparata(m: int) -> Z4Code:
    _check_m(m)
    code = kerdock(m).dual()
    code.family = "preparata"
    return code


def octacode() -> Z4Code:
    ring = get_ring(3)
    return Z4Code(kerdock_cyclic_generator(3), family="octacode", m=3, ring=ring)


def _trace_rows(ring: GaloisRing, multiplier: int) -> np.ndarray:
    """Rows (0, T(ξ^i ξ^{jt})) for i < m, with j = multiplier."""
    t = np.arange(ring.n)
    idx = (np.arange(ring.m)[:, None] + multiplier * t[None, :]) % ring.n
    body = ring.trace_table[idx]
    return np.concatenate([np.zeros((ring.m, 1), dtype=np.int64), body], axis=1)


def kerdock_codeword(ring: GaloisRing, lam, eps: int) -> Z4Vector:
    """c_t = T(λξ^t) + ε with c_∞ = ε."""
    body = lam.coords @ _trace_rows(ring, 1)[:, 1:] % 4
    return Z4Vector(np.concatenate([[eps % 4], (body + eps) % 4]))


def kerdock_binary_form(ring: GaloisRing, lam, eps: int) -> Tuple[np.ndarray, np.ndarray]:
    """(a_t, b_t) with a_t = tr(πx_t) + A and b_t = tr(ηx_t) + Q(πx_t) + B over x_t ∈ {0, θ^t}."""
    if ring.m % 2 == 0:
        raise ParameterError("the binary Kerdock form needs odd m")
    GF = ring.field
    a, b = ring.two_adic(lam)
    pi = ring.mu(a)
    eta = ring.mu((eps % 4) * a + b)
    big_a, big_b = eps & 1, (eps >> 1) & 1
    points = GF(np.concatenate([[0], ring.field_exp]).astype(int))
    px = pi * points

    def tr(values) -> np.ndarray:
        return values.field_trace().view(np.ndarray).astype(np.int64)

    quad = np.zeros(ring.n + 1, dtype=np.int64)
    for j in range(1, (ring.m - 1) // 2 + 1):
        quad ^= tr(px ** (1 + 2 ** j))
    a_bits = tr(px) ^ big_a
    b_bits = tr(eta * points) ^ quad ^ big_b
    return a_bits.astype(np.uint8), b_bits.astype(np.uint8)


def preparata_span_witness(m: int) -> Tuple[Z4Vector, Z4Vector, Z4Vector]:
    """Rows a, b of the h-generated matrix with 2α(a)∗α(b) of Lee weight 2."""
    rows = preparata_cyclic_generator(m)
    shift = m + 1
    if shift >= len(rows):
        raise ParameterError(f"no disjoint pair of generator rows at m={m}")
    a, b = rows[0], rows[shift]
    w = 2 * ((a % 2) * (b % 2)) % 4
    return Z4Vector(a), Z4Vector(b), Z4Vector(w)


# -- QRM and Delsarte-Goethals

def cyclotomic_representatives(n: int) -> List[int]:
    seen = set()
    reps = []
    for j in range(n):
        if j in seen:
            continue
        reps.append(j)
        k = j
        while k not in seen:
            seen.add(k)
            k = (2 * k) % n
    return reps


def binary_weight(j: int) -> int:
    return bin(j).count("1")


def qrm(r: int, m: int) -> Z4Code:
    """QRM(r, m): repetition plus (0, T(λξ^{jt})) over cyclotomic cosets of binary weight ≤ r."""
    _check_m(m, odd=False)
    ring = get_ring(m)
    if r == -1:
        return Z4Code(np.zeros((0, ring.n + 1)), family="qrm", m=m, r=r, ring=ring, length=ring.n + 1)
    if r < 0 or r > m:
        raise ParameterError(f"r must be in [0, {m}], got {r}")
    blocks = [np.ones((1, ring.n + 1), dtype=np.int64)]
    for j in cyclotomic_representatives(ring.n):
        # the coset of 0 stands for X^n and carries weight m
        weight = m if j == 0 else binary_weight(j)
        if weight <= r:
            blocks.append(_trace_rows(ring, j))
    return Z4Code(np.concatenate(blocks, axis=0), family="qrm", m=m, r=r, ring=ring)


def delsarte_goethals(m: int, r: int) -> Z4Code:
    _check_m(m)
    if r < 1 or r > (m - 1) // 2:
        raise ParameterError(f"r must be in [1, {(m - 1) // 2}], got {r}")
    ring = get_ring(m)
    blocks = [kerdock_trace_generator(m)]
    t = np.arange(ring.n)
    for j in range(1, r + 1):
        powers = ring.pow_table[((1 + 2 ** j) * t) % ring.n].T
        blocks.append(2 * np.concatenate([np.zeros((m, 1), dtype=np.int64), powers], axis=1))
    return Z4Code(np.concatenate(blocks, axis=0) % 4, family="dg", m=m, r=r, ring=ring)


def goethals(m: int) -> Z4Code:
    code = delsarte_goethals(m, 1).dual()
    code.family = "goethals"
    return code


def build_code(family: str, m: Optional[int] = None, r: Optional[int] = None) -> Z4Code:
    """Family descriptor to code, as the command line names them."""
    if family == "kerdock":
        return kerdock(m, allow_even=(m is not None and m % 2 == 0))
    if family == "preparata":
        return preparata(m)
    if family == "octacode":
        return octacode()
    if family == "zrm":
        return zrm(r, m)
    if family == "qrm":
        return qrm(r, m)
    if family == "dg":
        return delsarte_goethals(m, r)
    if family == "goethals":
        return goethals(m)
    raise ParameterError(f"family {family!r} cannot be built from parameters")
