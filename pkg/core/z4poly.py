"""Polynomials over ℤ₄, stored as coefficient arrays with the constant term first."""
from typing import Sequence, Tuple, Union

import numpy as np

from core.errors import MalformedInputError, ParameterError

PolyLike = Union[str, Sequence[int], np.ndarray]


def as_poly(p: PolyLike) -> np.ndarray:
    if isinstance(p, str):
        if not p or any(ch not in "0123" for ch in p):
            raise MalformedInputError(f"not a coefficient string: {p!r}")
        p = [int(ch) for ch in p]
    return trim(np.asarray(p, dtype=np.int64) % 4)


def trim(p: np.ndarray) -> np.ndarray:
    nz = np.nonzero(p)[0]
    if len(nz) == 0:
        return np.zeros(1, dtype=np.int64)
    return p[: nz[-1] + 1].copy()


def degree(p: np.ndarray) -> int:
    p = trim(p)
    return -1 if len(p) == 1 and p[0] == 0 else len(p) - 1


def to_string(p: np.ndarray) -> str:
    return "".join(str(int(c)) for c in trim(p))


def poly_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return trim(np.convolve(p, q) % 4)


def poly_divmod(p: np.ndarray, d: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Long division by a polynomial whose leading coefficient is a unit of ℤ₄."""
    p = trim(as_poly(p))
    d = trim(as_poly(d))
    lead = int(d[-1])
    if lead % 2 == 0:
        raise ParameterError("divisor must have a unit leading coefficient")
    inv = lead  # 1 and 3 are their own inverses mod 4
    rem = p.copy()
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        return np.zeros(1, dtype=np.int64), rem
    quot = np.zeros(len(rem) - dd, dtype=np.int64)
    for k in range(len(rem) - 1, dd - 1, -1):
        coeff = (rem[k] * inv) % 4
        if coeff:
            quot[k - dd] = coeff
            rem[k - dd : k + 1] = (rem[k - dd : k + 1] - coeff * d) % 4
    return trim(quot), trim(rem)


def reciprocal(p: np.ndarray, monic: bool = True) -> np.ndarray:
    """X^d p(1/X), scaled to be monic unless told otherwise."""
    p = trim(as_poly(p))
    rev = p[::-1].copy()
    if not monic:
        return trim(rev)
    lead = int(rev[-1])
    if lead % 2 == 0:
        raise ParameterError("reciprocal needs a unit constant term")
    return trim((rev * lead) % 4)


def x_power_minus_one(n: int) -> np.ndarray:
    out = np.zeros(n + 1, dtype=np.int64)
    out[0] = 3
    out[n] = 1
    return out
