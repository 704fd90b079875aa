"""ℤ₄ and ℤ₂ vectors, the Gray map and the Lee/Hamming metrics.

A ℤ₄ symbol c is stored through its 2-adic planes c = α(c) + 2β(c), so the
Gray map φ(c) = (β(c), γ(c)) with γ = α + β is a pair of plane operations.
"""
import itertools
import logging
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from core.errors import LengthMismatchError, MalformedInputError

logger = logging.getLogger(__name__)

LEE_WEIGHTS = np.array([0, 1, 2, 1], dtype=np.int64)


def _as_int_array(values, kind: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1:
        raise MalformedInputError(f"{kind} must be one-dimensional, got shape {arr.shape}")
    return arr


class BinaryVector:
    __slots__ = ("_bits",)

    def __init__(self, bits):
        arr = _as_int_array(bits, "BinaryVector")
        if np.any((arr != 0) & (arr != 1)):
            raise MalformedInputError("binary symbols must be 0 or 1")
        self._bits = arr.astype(np.uint8)
        self._bits.setflags(write=False)

    @classmethod
    def parse(cls, text: str) -> "BinaryVector":
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise MalformedInputError(f"not a binary string: {text!r}")
        return cls([int(ch) for ch in text])

    @classmethod
    def zeros(cls, length: int) -> "BinaryVector":
        return cls(np.zeros(length, dtype=np.uint8))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def __len__(self) -> int:
        return len(self._bits)

    def _check(self, other: "BinaryVector") -> None:
        if len(self) != len(other):
            raise LengthMismatchError(f"lengths differ: {len(self)} != {len(other)}")

    def __add__(self, other: "BinaryVector") -> "BinaryVector":
        self._check(other)
        return BinaryVector(self._bits ^ other._bits)

    def __mul__(self, other: "BinaryVector") -> "BinaryVector":
        # componentwise product ∗
        self._check(other)
        return BinaryVector(self._bits & other._bits)

    def swap(self) -> "BinaryVector":
        """σ: exchange the left and right halves."""
        if len(self) % 2:
            raise MalformedInputError("swap needs an even length")
        half = len(self) // 2
        return BinaryVector(np.concatenate([self._bits[half:], self._bits[:half]]))

    def weight(self) -> int:
        return int(self._bits.sum())

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryVector) and np.array_equal(self._bits, other._bits)

    def __hash__(self) -> int:
        return hash(self._bits.tobytes())

    def __str__(self) -> str:
        return "".join(str(int(b)) for b in self._bits)

    def __repr__(self) -> str:
        return f"BinaryVector('{self}')"


class Z4Vector:
    __slots__ = ("_alpha", "_beta")

    def __init__(self, symbols):
        arr = _as_int_array(symbols, "Z4Vector")
        if np.any((arr < 0) | (arr > 3)):
            raise MalformedInputError("quaternary symbols must lie in {0,1,2,3}")
        self._alpha = (arr & 1).astype(np.uint8)
        self._beta = ((arr >> 1) & 1).astype(np.uint8)
        self._alpha.setflags(write=False)
        self._beta.setflags(write=False)

    @classmethod
    def from_planes(cls, alpha, beta) -> "Z4Vector":
        alpha = np.asarray(alpha, dtype=np.int64)
        beta = np.asarray(beta, dtype=np.int64)
        if alpha.shape != beta.shape:
            raise LengthMismatchError("bit planes differ in length")
        return cls(alpha + 2 * beta)

    @classmethod
    def parse(cls, text: str) -> "Z4Vector":
        text = text.strip()
        if not text or any(ch not in "0123" for ch in text):
            raise MalformedInputError(f"not a quaternary string: {text!r}")
        return cls([int(ch) for ch in text])

    @classmethod
    def zeros(cls, length: int) -> "Z4Vector":
        return cls(np.zeros(length, dtype=np.int64))

    @property
    def alpha(self) -> np.ndarray:
        return self._alpha

    @property
    def beta(self) -> np.ndarray:
        return self._beta

    @property
    def symbols(self) -> np.ndarray:
        return self._alpha.astype(np.int64) + 2 * self._beta.astype(np.int64)

    def __len__(self) -> int:
        return len(self._alpha)

    def _check(self, other: "Z4Vector") -> None:
        if len(self) != len(other):
            raise LengthMismatchError(f"lengths differ: {len(self)} != {len(other)}")

    def __add__(self, other: "Z4Vector") -> "Z4Vector":
        self._check(other)
        return Z4Vector((self.symbols + other.symbols) % 4)

    def __sub__(self, other: "Z4Vector") -> "Z4Vector":
        self._check(other)
        return Z4Vector((self.symbols - other.symbols) % 4)

    def __neg__(self) -> "Z4Vector":
        return Z4Vector((-self.symbols) % 4)

    def __rmul__(self, scalar: int) -> "Z4Vector":
        return Z4Vector((int(scalar) * self.symbols) % 4)

    def dot(self, other: "Z4Vector") -> int:
        self._check(other)
        return int((self.symbols * other.symbols).sum() % 4)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Z4Vector)
            and np.array_equal(self._alpha, other._alpha)
            and np.array_equal(self._beta, other._beta)
        )

    def __hash__(self) -> int:
        return hash((self._alpha.tobytes(), self._beta.tobytes()))

    def __str__(self) -> str:
        return "".join(str(int(c)) for c in self.symbols)

    def __repr__(self) -> str:
        return f"Z4Vector('{self}')"


def alpha_beta_gamma(v: Z4Vector) -> Tuple[BinaryVector, BinaryVector, BinaryVector]:
    alpha = v.alpha
    beta = v.beta
    return BinaryVector(alpha), BinaryVector(beta), BinaryVector(alpha ^ beta)


def gray_map(v: Z4Vector) -> BinaryVector:
    return BinaryVector(np.concatenate([v.beta, v.alpha ^ v.beta]))


def gray_inverse(b: BinaryVector) -> Z4Vector:
    if len(b) % 2:
        raise MalformedInputError(f"Gray images have even length, got {len(b)}")
    half = len(b) // 2
    beta = b.bits[:half]
    gamma = b.bits[half:]
    return Z4Vector.from_planes(beta ^ gamma, beta)


def gray_map_rows(words: np.ndarray) -> np.ndarray:
    """Row-wise Gray map of an (N, n) symbol array, giving (N, 2n) bits."""
    words = np.asarray(words, dtype=np.int64) % 4
    alpha = words & 1
    beta = (words >> 1) & 1
    return np.concatenate([beta, alpha ^ beta], axis=-1).astype(np.uint8)


def gray_inverse_rows(bits: np.ndarray) -> np.ndarray:
    bits = np.asarray(bits, dtype=np.int64)
    half = bits.shape[-1] // 2
    beta = bits[..., :half]
    gamma = bits[..., half:]
    return (beta ^ gamma) + 2 * beta


def lee_weights_rows(words: np.ndarray) -> np.ndarray:
    return LEE_WEIGHTS[np.asarray(words, dtype=np.int64) % 4].sum(axis=-1)


def lee_weight(v: Z4Vector) -> int:
    return int(LEE_WEIGHTS[v.symbols].sum())


def lee_distance(u: Z4Vector, v: Z4Vector) -> int:
    return lee_weight(u - v)


def hamming_weight(v) -> int:
    if isinstance(v, Z4Vector):
        return int(np.count_nonzero(v.symbols))
    return v.weight()


def hamming_distance(u, v) -> int:
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths differ: {len(u)} != {len(v)}")
    if isinstance(u, Z4Vector):
        return hamming_weight(u - v)
    return (u + v).weight()


def z4_linearity_condition(
    words: Iterable[BinaryVector],
    linear: bool = False,
    basis: Optional[Sequence[BinaryVector]] = None,
) -> Tuple[bool, Optional[Tuple[BinaryVector, BinaryVector]]]:
    """Closure of a binary code under the ℤ₄-linearity rule in the given coordinates.

    With ``linear`` the code is assumed to be a linear binary code and only the
    product term (u + σu) ∗ (v + σv) must lie in it. That term is bilinear, so
    a ``basis`` of the linear code may stand in for the pairs.
    """
    code = list(dict.fromkeys(words))
    if not code:
        return True, None
    if len(code[0]) % 2:
        raise MalformedInputError("linearity conditions need an even length")
    members = {w.bits.tobytes() for w in code}
    pairs_from = list(basis) if (linear and basis is not None) else code
    folded = [w + w.swap() for w in pairs_from]
    for i, j in itertools.combinations_with_replacement(range(len(pairs_from)), 2):
        term = folded[i] * folded[j]
        target = term if linear else pairs_from[i] + pairs_from[j] + term
        if target.bits.tobytes() not in members:
            logger.debug(f"linearity closure fails at pair ({i}, {j})")
            return False, (pairs_from[i], pairs_from[j])
    return True, None


def all_vectors(n: int) -> np.ndarray:
    """Every vector of ℤ₄ⁿ as rows, lexicographic."""
    return np.array(list(itertools.product(range(4), repeat=n)), dtype=np.int64).reshape(-1, n)


def swap_rows(bits: np.ndarray) -> np.ndarray:
    bits = np.asarray(bits)
    half = bits.shape[-1] // 2
    return np.concatenate([bits[..., half:], bits[..., :half]], axis=-1)


def gray_sum_rule_holds(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """φ(a+b) = φ(a) + φ(b) + (φ(a) + σφ(a)) ∗ (φ(b) + σφ(b)), row by row."""
    pa, pb = gray_map_rows(a), gray_map_rows(b)
    rhs = pa ^ pb ^ ((pa ^ swap_rows(pa)) & (pb ^ swap_rows(pb)))
    return (gray_map_rows((np.asarray(a) + np.asarray(b)) % 4) == rhs).all(axis=-1)


def gray_carry_rule_holds(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """φ(a) + φ(b) + φ(a+b) = φ(2α(a) ∗ α(b)), row by row."""
    a = np.asarray(a, dtype=np.int64) % 4
    b = np.asarray(b, dtype=np.int64) % 4
    lhs = gray_map_rows(a) ^ gray_map_rows(b) ^ gray_map_rows((a + b) % 4)
    return (lhs == gray_map_rows(2 * ((a & 1) & (b & 1)))).all(axis=-1)
