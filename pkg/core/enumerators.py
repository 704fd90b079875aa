"""Weight enumerators of ℤ₄ codes and their MacWilliams transforms.

Coefficients are Python integers. The complete-enumerator transform runs over
the Gaussian integers through sympy, so nothing is ever rounded.
"""
import logging
from collections import Counter
from math import comb
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np
import sympy

from core.errors import NonIntegralEnumeratorError, ParameterError
from core.z4 import Z4Vector

logger = logging.getLogger(__name__)

FLAVORS = ("cwe", "swe", "lee", "hamming")

W, X, Y, Z = sympy.symbols("W X Y Z")
GENERATORS = {
    "cwe": (W, X, Y, Z),
    "swe": (W, X, Y),
    "lee": (W, X),
    "hamming": (W, X),
}
SUBSTITUTIONS = {
    "cwe": (W + X + Y + Z, W + sympy.I * X - Y - sympy.I * Z, W - X + Y - Z, W - sympy.I * X - Y + sympy.I * Z),
    "swe": (W + 2 * X + Y, W - Y, W - 2 * X + Y),
    "lee": (W + X, W - X),
    "hamming": (W + 3 * X, W - X),
}

Exponents = Tuple[int, ...]


class WeightEnumerator:
    __slots__ = ("flavor", "n", "terms")

    def __init__(self, flavor: str, n: int, terms: Dict[Exponents, int]):
        if flavor not in FLAVORS:
            raise ParameterError(f"unknown enumerator flavor {flavor!r}")
        self.flavor = flavor
        self.n = n
        self.terms = {tuple(int(e) for e in k): int(v) for k, v in terms.items() if v}
        total = self.degree
        for exps in self.terms:
            if sum(exps) != total or len(exps) != len(GENERATORS[flavor]):
                raise ParameterError(f"exponents {exps} do not fit a {flavor} enumerator of length {n}")

    @property
    def degree(self) -> int:
        return 2 * self.n if self.flavor == "lee" else self.n

    @property
    def size(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if (self.flavor, self.n) != (other.flavor, other.n):
            raise ParameterError("enumerators of different kinds cannot be merged")
        merged = Counter(self.terms)
        merged.update(other.terms)
        return WeightEnumerator(self.flavor, self.n, dict(merged))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightEnumerator)
            and (self.flavor, self.n) == (other.flavor, other.n)
            and self.terms == other.terms
        )

    def to_swe(self) -> "WeightEnumerator":
        if self.flavor == "swe":
            return self
        if self.flavor != "cwe":
            raise ParameterError(f"cannot derive swe from {self.flavor}")
        out: Counter = Counter()
        for (w, x, y, z), c in self.terms.items():
            out[(w, x + z, y)] += c
        return WeightEnumerator("swe", self.n, dict(out))

    def to_lee(self) -> "WeightEnumerator":
        if self.flavor == "lee":
            return self
        out: Counter = Counter()
        for (w, x, y), c in self.to_swe().terms.items():
            out[(2 * w + x, x + 2 * y)] += c
        return WeightEnumerator("lee", self.n, dict(out))

    def to_hamming(self) -> "WeightEnumerator":
        if self.flavor == "hamming":
            return self
        out: Counter = Counter()
        for (w, x, y), c in self.to_swe().terms.items():
            out[(w, x + y)] += c
        return WeightEnumerator("hamming", self.n, dict(out))

    def distribution(self) -> List[int]:
        """A_i indexed by the weight (the X exponent) for Lee and Hamming enumerators."""
        if self.flavor not in ("lee", "hamming"):
            raise ParameterError("distributions come from lee or hamming enumerators")
        counts = [0] * (self.degree + 1)
        for (_, x), c in self.terms.items():
            counts[x] += c
        return counts

    def to_expr(self):
        gens = GENERATORS[self.flavor]
        return sympy.Add(*[
            c * sympy.Mul(*[g ** e for g, e in zip(gens, exps)])
            for exps, c in sorted(self.terms.items(), reverse=True)
        ])

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "n": self.n,
            "terms": [
                {"exps": list(exps), "coeff": str(c)}
                for exps, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "WeightEnumerator":
        terms = {tuple(t["exps"]): int(t["coeff"]) for t in payload["terms"]}
        return cls(payload["flavor"], int(payload["n"]), terms)

    def __repr__(self) -> str:
        return f"WeightEnumerator({self.flavor}, n={self.n}, {self.to_expr()})"


def composition_counts(rows: np.ndarray) -> np.ndarray:
    """(n₀, n₁, n₂, n₃) for each row of a symbol array."""
    rows = np.asarray(rows, dtype=np.int64) % 4
    return np.stack([(rows == s).sum(axis=-1) for s in range(4)], axis=-1)


def enumerator_from_rows(rows: np.ndarray, flavor: str = "cwe") -> WeightEnumerator:
    rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
    n = rows.shape[1]
    comps, counts = np.unique(composition_counts(rows), axis=0, return_counts=True)
    cwe = WeightEnumerator("cwe", n, {tuple(int(v) for v in k): int(c) for k, c in zip(comps, counts)})
    return convert(cwe, flavor)


def enumerator(codewords: Iterable[Union[Z4Vector, np.ndarray]], flavor: str = "cwe") -> WeightEnumerator:
    total = None
    batch: List[np.ndarray] = []
    for word in codewords:
        batch.append(word.symbols if isinstance(word, Z4Vector) else np.asarray(word))
        if len(batch) >= 4096:
            part = enumerator_from_rows(np.stack(batch), "cwe")
            total = part if total is None else total + part
            batch = []
    if batch:
        part = enumerator_from_rows(np.stack(batch), "cwe")
        total = part if total is None else total + part
    if total is None:
        raise ParameterError("no codewords supplied")
    return convert(total, flavor)


def convert(e: WeightEnumerator, flavor: str) -> WeightEnumerator:
    if flavor == e.flavor:
        return e
    if flavor == "swe":
        return e.to_swe()
    if flavor == "lee":
        return e.to_lee()
    if flavor == "hamming":
        return e.to_hamming()
    raise ParameterError(f"cannot convert {e.flavor} to {flavor}")


def macwilliams(e: WeightEnumerator, code_size: int) -> WeightEnumerator:
    """Enumerator of the dual code from the enumerator of a code of size ``code_size``."""
    gens = GENERATORS[e.flavor]
    subs = [sympy.Poly(s, *gens) for s in SUBSTITUTIONS[e.flavor]]
    powers: Dict[Tuple[int, int], sympy.Poly] = {}

    def power(i: int, k: int) -> sympy.Poly:
        if (i, k) not in powers:
            powers[(i, k)] = subs[i] ** k
        return powers[(i, k)]

    total = sympy.Poly(0, *gens)
    for exps, coeff in e.terms.items():
        term = sympy.Poly(coeff, *gens)
        for i, k in enumerate(exps):
            if k:
                term = term * power(i, k)
        total = total + term

    dual_terms: Dict[Exponents, int] = {}
    for monom, coeff in total.terms():
        re, im = sympy.expand(coeff).as_real_imag()
        if im != 0 or not re.is_Integer:
            raise NonIntegralEnumeratorError(f"coefficient {coeff} of {monom} is not a rational integer")
        value = int(re)
        if value % code_size:
            raise NonIntegralEnumeratorError(f"coefficient {value} of {monom} is not divisible by {code_size}")
        value //= code_size
        if value < 0:
            raise NonIntegralEnumeratorError(f"negative coefficient {value} at {monom}")
        if value:
            dual_terms[tuple(int(x) for x in monom)] = value

    dual = WeightEnumerator(e.flavor, e.n, dual_terms)
    expected, rest = divmod(4 ** e.n, code_size)
    if rest or dual.size != expected:
        raise NonIntegralEnumeratorError(f"dual size {dual.size} != 4^{e.n}/{code_size}")
    return dual


def krawtchouk(j: int, i: int, length: int) -> int:
    return sum((-1) ** s * comb(i, s) * comb(length - i, j - s) for s in range(j + 1))


def binary_macwilliams(distribution: List[int], code_size: int) -> List[int]:
    """Distance distribution of the formal dual of a binary code."""
    length = len(distribution) - 1
    out = []
    for j in range(length + 1):
        value = sum(a * krawtchouk(j, i, length) for i, a in enumerate(distribution) if a)
        if value % code_size:
            raise NonIntegralEnumeratorError(f"B_{j} = {value}/{code_size} is not integral")
        out.append(value // code_size)
    return out
