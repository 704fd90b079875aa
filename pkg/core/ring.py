"""The Galois ring GR(4^m) and its residue field GF(2^m).

Elements are kept in additive coordinates b₀ + b₁ξ + … + b_{m−1}ξ^{m−1}. The
powers of ξ come from the shift register with feedback h(X); every product is
a ℤ₄-combination of rows of that table. The residue field is a ``galois``
field built on h₂ = h mod 2, so μ(ξ) is the polynomial-basis element x.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from config.settings import DEFAULT_H2, get_settings
from core import z4poly
from core.errors import (
    MalformedInputError,
    NotPrimitiveError,
    ParameterError,
    ZeroDivisorError,
)

logger = logging.getLogger(__name__)
settings = get_settings()

BinaryPolyLike = Union[str, Sequence[int]]


def _binary_coeffs(h2: BinaryPolyLike) -> List[int]:
    if isinstance(h2, str):
        if not h2 or any(ch not in "01" for ch in h2):
            raise MalformedInputError(f"not a binary coefficient string: {h2!r}")
        coeffs = [int(ch) for ch in h2]
    else:
        coeffs = [int(c) % 2 for c in h2]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def graeffe_lift(h2: BinaryPolyLike) -> np.ndarray:
    """Lift a primitive binary polynomial to the monic basic irreducible h over ℤ₄.

    Writing h₂ = e − d with e, d the even and odd parts, h(X²) = ±(e² − d²).
    """
    coeffs = _binary_coeffs(h2)
    m = len(coeffs) - 1
    if m < 2:
        raise ParameterError(f"degree must be at least 2, got {m}")
    even = np.array([c if k % 2 == 0 else 0 for k, c in enumerate(coeffs)], dtype=np.int64)
    odd = np.array([c if k % 2 == 1 else 0 for k, c in enumerate(coeffs)], dtype=np.int64)
    diff = np.convolve(even, even) - np.convolve(odd, odd)
    h = diff[0::2].copy()
    if h[m] % 4 == 3:
        h = -h
    h %= 4

    n = 2 ** m - 1
    _, rem = z4poly.poly_divmod(z4poly.x_power_minus_one(n), h)
    if z4poly.degree(rem) >= 0:
        raise NotPrimitiveError(f"lift {z4poly.to_string(h)} does not divide X^{n} - 1")
    return h


class RingElement:
    __slots__ = ("ring", "coords")

    def __init__(self, ring: "GaloisRing", coords):
        coords = np.asarray(coords, dtype=np.int64) % 4
        if coords.shape != (ring.m,):
            raise MalformedInputError(f"expected {ring.m} coordinates, got shape {coords.shape}")
        self.ring = ring
        self.coords = coords
        self.coords.setflags(write=False)

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            return other
        return self.ring.scalar(int(other))

    def __add__(self, other) -> "RingElement":
        return RingElement(self.ring, self.coords + self._coerce(other).coords)

    __radd__ = __add__

    def __sub__(self, other) -> "RingElement":
        return RingElement(self.ring, self.coords - self._coerce(other).coords)

    def __rsub__(self, other) -> "RingElement":
        return self._coerce(other) - self

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, -self.coords)

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, (int, np.integer)):
            return RingElement(self.ring, int(other) * self.coords)
        return self.ring.mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RingElement":
        return self.ring.power(self, e)

    def is_zero(self) -> bool:
        return not self.coords.any()

    def key(self) -> int:
        return self.ring.key(self.coords)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.ring.scalar(int(other))
        return isinstance(other, RingElement) and np.array_equal(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        return "".join(str(int(c)) for c in self.coords)

    def __repr__(self) -> str:
        return f"RingElement('{self}')"


class GaloisRing:
    def __init__(self, m: int, h2: Optional[BinaryPolyLike] = None):
        if m < 2 or m > settings.max_ring_degree:
            raise ParameterError(f"m must be in [2, {settings.max_ring_degree}], got {m}")
        if h2 is None:
            h2 = DEFAULT_H2[m]
        bits = _binary_coeffs(h2)
        if len(bits) - 1 != m:
            raise ParameterError(f"h2 has degree {len(bits) - 1}, expected {m}")

        self.m = m
        self.n = 2 ** m - 1
        self.h2 = np.array(bits, dtype=np.int64)
        self.h = graeffe_lift(bits)
        self.pow_table = self._shift_register()
        self._log: Dict[int, int] = {self.key(row): k for k, row in enumerate(self.pow_table)}

        try:
            self.field = galois.GF(2 ** m, irreducible_poly=int(sum(b << i for i, b in enumerate(bits))))
        except ValueError as e:
            raise NotPrimitiveError(f"h2 is not irreducible: {str(e)}")

        self.trace_table = np.array([self._trace_of_power(k) for k in range(self.n)], dtype=np.int64)
        self.field_exp = np.array(
            [self._bits_to_int(row % 2) for row in self.pow_table], dtype=np.int64
        )
        self.field_log = np.full(2 ** m, -1, dtype=np.int64)
        self.field_log[self.field_exp] = np.arange(self.n)
        self._as_table = self._artin_schreier_table()
        logger.debug(f"built GR(4^{m}) with h = {z4poly.to_string(self.h)}")

    # -- construction helpers

    def _shift_register(self) -> np.ndarray:
        m, n = self.m, self.n
        table = np.zeros((n, m), dtype=np.int64)
        state = np.zeros(m, dtype=np.int64)
        state[0] = 1
        for k in range(n):
            table[k] = state
            overflow = state[m - 1]
            nxt = np.zeros(m, dtype=np.int64)
            nxt[1:] = state[:-1]
            state = (nxt - overflow * self.h[:m]) % 4
            if k + 1 < n and np.array_equal(state % 2, table[0] % 2):
                raise NotPrimitiveError(f"θ has order {k + 1} < {n}; h2 is not primitive")
        if not np.array_equal(state, table[0]):
            raise NotPrimitiveError(f"ξ^{n} != 1")
        return table

    def _trace_of_power(self, k: int) -> int:
        total = np.zeros(self.m, dtype=np.int64)
        for j in range(self.m):
            total += self.pow_table[(k << j) % self.n]
        total %= 4
        if total[1:].any():
            raise ArithmeticError(f"trace of ξ^{k} left the base ring")
        return int(total[0])

    def _artin_schreier_table(self) -> np.ndarray:
        table = np.full(2 ** self.m, -1, dtype=np.int64)
        ws = self.field.elements
        zs = (ws ** 2 + ws).view(np.ndarray).astype(np.int64)
        for w, z in zip(range(2 ** self.m), zs):
            if table[z] < 0:
                table[z] = w
        return table

    @staticmethod
    def _bits_to_int(bits) -> int:
        return int(sum(int(b) << i for i, b in enumerate(bits)))

    def key(self, coords) -> int:
        return int(sum(int(c) << (2 * i) for i, c in enumerate(coords)))

    # -- elements

    def element(self, coords) -> RingElement:
        if isinstance(coords, str):
            if len(coords) != self.m or any(ch not in "0123" for ch in coords):
                raise MalformedInputError(f"not a ring element string: {coords!r}")
            coords = [int(ch) for ch in coords]
        return RingElement(self, coords)

    def scalar(self, c: int) -> RingElement:
        coords = np.zeros(self.m, dtype=np.int64)
        coords[0] = c % 4
        return RingElement(self, coords)

    def zero(self) -> RingElement:
        return self.scalar(0)

    def one(self) -> RingElement:
        return self.scalar(1)

    def xi(self, k: Optional[int]) -> RingElement:
        """ξ^k, with ξ^∞ = 0 for ``k is None``."""
        if k is None:
            return self.zero()
        return RingElement(self, self.pow_table[k % self.n])

    def teichmuller(self) -> List[RingElement]:
        return [self.zero()] + [self.xi(k) for k in range(self.n)]

    def elements(self) -> List[RingElement]:
        keys = np.arange(4 ** self.m)
        coords = (keys[:, None] >> (2 * np.arange(self.m))) & 3
        return [RingElement(self, row) for row in coords]

    def log(self, c: RingElement) -> Optional[int]:
        """Exponent k with c = ξ^k; None for zero."""
        if c.is_zero():
            return None
        k = self._log.get(c.key())
        if k is None:
            raise ParameterError(f"{c} is not a Teichmüller element")
        return k

    def is_teichmuller(self, c: RingElement) -> bool:
        return c.is_zero() or c.key() in self._log

    # -- arithmetic

    def mul(self, c: RingElement, d: RingElement) -> RingElement:
        conv = np.convolve(c.coords, d.coords)
        return RingElement(self, conv @ self.pow_table[: len(conv)])

    def mul_xi(self, c: RingElement, k: int) -> RingElement:
        idx = (np.arange(self.m) + k) % self.n
        return RingElement(self, c.coords @ self.pow_table[idx])

    def power(self, c: RingElement, e: int) -> RingElement:
        if e < 0:
            return self.power(self.invert(c), -e)
        result = self.one()
        base = c
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def invert(self, c: RingElement) -> RingElement:
        if not (c.coords % 2).any():
            raise ZeroDivisorError(f"{c} lies in 2R and has no inverse")
        return self.power(c, 2 ** self.m * self.n - 1)

    def tau(self, c: RingElement) -> RingElement:
        for _ in range(self.m):
            c = self.mul(c, c)
        return c

    def two_adic(self, c: RingElement) -> Tuple[RingElement, RingElement]:
        a = self.tau(c)
        rest = (c.coords - a.coords) % 4
        if (rest % 2).any():
            raise ArithmeticError(f"{c} - τ({c}) is not in 2R")
        b = self.tau(RingElement(self, rest // 2))
        return a, b

    def frobenius(self, c: RingElement) -> RingElement:
        a, b = self.two_adic(c)
        return self.mul(a, a) + 2 * self.mul(b, b)

    def trace(self, c: RingElement) -> int:
        return int(c.coords @ self.trace_table[: self.m] % 4)

    def trace_by_orbit(self, c: RingElement) -> int:
        total = self.zero()
        x = c
        for _ in range(self.m):
            total = total + x
            x = self.frobenius(x)
        if total.coords[1:].any():
            raise ArithmeticError(f"T({c}) left the base ring")
        return int(total.coords[0])

    def ring_log(self, c: RingElement) -> Tuple[int, RingElement]:
        """Write a unit as ξ^r (1 + 2t) with t ∈ 𝒯."""
        a, b = self.two_adic(c)
        r = self.log(a)
        if r is None:
            raise ZeroDivisorError(f"{c} is not a unit")
        return r, self.mul_xi(b, -r)

    def units(self) -> List[RingElement]:
        return [
            self.mul_xi(self.one() + 2 * t, r)
            for r in range(self.n)
            for t in self.teichmuller()
        ]

    # -- residue field

    def mu(self, c: RingElement):
        return self.field(self._bits_to_int(c.coords % 2))

    def theta(self, k: Optional[int]):
        if k is None:
            return self.field(0)
        return self.field(int(self.field_exp[k % self.n]))

    def field_log_of(self, x) -> Optional[int]:
        k = int(self.field_log[int(x)])
        return None if k < 0 else k

    def lift(self, x) -> RingElement:
        """The Teichmüller element above x."""
        return self.xi(self.field_log_of(x))

    def trace_field(self, x) -> int:
        return int(self.field(int(x)).field_trace())

    def solve_artin_schreier(self, a, k) -> list:
        """Roots of u² + au + k = 0 in GF(2^m), as a sorted list."""
        a = self.field(int(a))
        k = self.field(int(k))
        if a == 0:
            raise ParameterError("u^2 + a u + k needs a != 0")
        z = k / (a * a)
        w = int(self._as_table[int(z)])
        if w < 0:
            return []
        w = self.field(w)
        roots = [a * w, a * (w + self.field(1))]
        return sorted(roots, key=int)

    def polynomial(self) -> str:
        return z4poly.to_string(self.h)


@lru_cache()
def get_ring(m: int, h2: Optional[str] = None) -> GaloisRing:
    return GaloisRing(m, h2)


# Structural properties of the Teichmüller powers. Each returns a violating
# tuple, or None when the property holds.

def signed_sums_are_units(ring: GaloisRing):
    """±ξ^j ± ξ^k is a unit whenever j != k."""
    for j in range(ring.n):
        for k in range(j + 1, ring.n):
            for sj in (1, 3):
                for sk in (1, 3):
                    c = sj * ring.xi(j) + sk * ring.xi(k)
                    if not (c.coords % 2).any():
                        return (j, k, sj, sk)
    return None


def differences_avoid_powers(ring: GaloisRing):
    """ξ^j − ξ^k is never ±ξ^l."""
    signed = {}
    for l in range(ring.n):
        signed[ring.xi(l).key()] = l
        signed[(-ring.xi(l)).key()] = l
    for j in range(ring.n):
        for k in range(ring.n):
            if j == k:
                continue
            l = signed.get((ring.xi(j) - ring.xi(k)).key())
            if l is not None:
                return (j, k, l)
    return None


def differences_are_distinct(ring: GaloisRing):
    seen = {}
    for i in range(ring.n):
        for j in range(ring.n):
            if i == j:
                continue
            key = (ring.xi(i) - ring.xi(j)).key()
            if key in seen:
                return seen[key] + (i, j)
            seen[key] = (i, j)
    return None


def zero_sums_are_trivial(ring: GaloisRing):
    """ξ^i + ξ^j + ξ^k + ξ^l = 0 only when all four exponents agree (odd m)."""
    if ring.m % 2 == 0:
        raise ParameterError("the four-term sum property needs odd m")
    sums: Dict[int, List[Tuple[int, int]]] = {}
    for i in range(ring.n):
        for j in range(i, ring.n):
            sums.setdefault((ring.xi(i) + ring.xi(j)).key(), []).append((i, j))
    for i in range(ring.n):
        for j in range(i, ring.n):
            neg = (-(ring.xi(i) + ring.xi(j))).key()
            for k, l in sums.get(neg, []):
                if not (i == j == k == l):
                    return (i, j, k, l)
    return None
