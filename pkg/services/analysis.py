"""Weight distributions, designs, automorphisms and structural checks on codes."""
import itertools
import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.enumerators import enumerator_from_rows, macwilliams
from core.errors import ParameterError, ResourceCapError
from core.ring import GaloisRing, RingElement
from core.z4 import lee_weights_rows
from models import DesignCheck, WeightDistribution
from services.codes import Z4Code, kerdock, preparata, zrm

logger = logging.getLogger(__name__)


# -- weight distributions

def _enumerated_counts(code: Z4Code, metric: str) -> Counter:
    """Weights of every codeword. "hamming" counts nonzero ℤ₄ symbols, not bits of φ(c)."""
    counts: Counter = Counter()
    for block in code.iter_codewords():
        if metric == "lee":
            weights = lee_weights_rows(block)
        else:
            weights = np.count_nonzero(block, axis=1)
        values, freq = np.unique(weights, return_counts=True)
        counts.update({int(v): int(f) for v, f in zip(values, freq)})
    return counts


def weight_distribution(code: Z4Code, metric: str = "lee") -> WeightDistribution:
    """Lee or symbol-Hamming distribution; codes over the enumeration cap go through their dual.

    The Hamming weight of the Gray image φ(C) equals the Lee weight, so ``metric="lee"``
    is the distribution of the binary image. ``metric="hamming"`` is the ℤ₄ Hamming
    weight, the number of nonzero symbols.
    """
    if metric not in ("lee", "hamming"):
        raise ParameterError(f"unknown metric {metric!r}")
    try:
        counts = _enumerated_counts(code, metric)
        source = "enumeration"
    except ResourceCapError:
        dual = code.dual()
        logger.info(f"{code.describe()} is too large to enumerate; using MacWilliams on its dual")
        total = None
        for block in dual.iter_codewords():
            part = enumerator_from_rows(block, metric)
            total = part if total is None else total + part
        distribution = macwilliams(total, dual.size).distribution()
        counts = Counter({w: c for w, c in enumerate(distribution) if c})
        source = "macwilliams"
    return WeightDistribution(
        family=code.describe(),
        metric=metric,
        length=code.length,
        counts=dict(sorted(counts.items())),
        source=source,
    )


def kerdock_weight_formula(m: int) -> Dict[int, int]:
    """Lee weight distribution of 𝒦(m) (the Hamming distribution of its Gray image)."""
    if m % 2:
        shift = 2 ** ((m - 1) // 2)
        side = 2 ** (m + 1) * (2 ** m - 1)
        middle = 2 ** (m + 2) - 2
    else:
        shift = 2 ** (m // 2)
        side = 2 ** m * (2 ** m - 1)
        middle = 2 ** (m + 1) * (2 ** m + 1) - 2
    return {
        0: 1,
        2 ** m - shift: side,
        2 ** m: middle,
        2 ** m + shift: side,
        2 ** (m + 1): 1,
    }


def distance_invariance_check(words: np.ndarray, sample: Optional[Iterable[int]] = None) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Whether the Hamming distance distribution seen from each word is the same.

    Returns the pair of word indices whose distributions differ on failure.
    """
    words = np.asarray(words, dtype=np.int64)
    if len(words) == 0:
        return True, None
    indices = list(range(len(words))) if sample is None else list(sample)
    length = words.shape[1]

    def profile(i: int) -> np.ndarray:
        distances = np.count_nonzero(words != words[i], axis=1)
        return np.bincount(distances, minlength=length + 1)

    reference = profile(indices[0])
    for i in indices[1:]:
        if not np.array_equal(profile(i), reference):
            return False, (indices[0], i)
    return True, None


# -- designs

def blocks_of_weight(words: np.ndarray, weight: int) -> List[frozenset]:
    words = np.asarray(words)
    chosen = words[np.count_nonzero(words, axis=1) == weight]
    return [frozenset(np.flatnonzero(row).tolist()) for row in chosen]


def design_check(blocks: Sequence[frozenset], t: int, v: int) -> DesignCheck:
    """Whether every t-subset of the v points lies in the same number of blocks."""
    if not blocks:
        return DesignCheck(t=t, v=v, k=0, blocks=0, lam=None, holds=False)
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise ParameterError(f"blocks have mixed sizes {sorted(sizes)}")
    k = sizes.pop()
    incidence = np.zeros((len(blocks), v), dtype=bool)
    for i, block in enumerate(blocks):
        incidence[i, list(block)] = True

    lam = None
    for subset in itertools.combinations(range(v), t):
        count = int(incidence[:, list(subset)].all(axis=1).sum())
        if lam is None:
            lam = count
        elif count != lam:
            return DesignCheck(t=t, v=v, k=k, blocks=len(blocks), lam=None, holds=False, witness=list(subset))
    return DesignCheck(t=t, v=v, k=k, blocks=len(blocks), lam=lam, holds=True)


# -- automorphisms

def permute_rows(rows: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    """Move coordinate i to perm[i]."""
    rows = np.atleast_2d(np.asarray(rows))
    out = np.empty_like(rows)
    out[:, np.asarray(perm)] = rows
    return out


def is_automorphism(code: Z4Code, perm: Sequence[int]) -> bool:
    if len(code.generator) == 0:
        return True
    return bool(code.contains_rows(permute_rows(code.generator, perm)).all())


def affine_permutation(ring: GaloisRing, a: RingElement, b: RingElement) -> np.ndarray:
    """Coordinates moved by x ↦ τ(ax + b) over the points (0, 1, ξ, …, ξ^{n−1})."""
    if a.is_zero() or not ring.is_teichmuller(a) or not ring.is_teichmuller(b):
        raise ParameterError("affine maps need a ∈ 𝒯 \\ {0} and b ∈ 𝒯")
    perm = np.empty(ring.n + 1, dtype=np.int64)
    for i, x in enumerate(ring.teichmuller()):
        image = ring.tau(ring.mul(a, x) + b)
        k = ring.log(image)
        perm[i] = 0 if k is None else k + 1
    return perm


def affine_maps(ring: GaloisRing) -> Iterable[Tuple[RingElement, RingElement]]:
    points = ring.teichmuller()
    for a in points[1:]:
        for b in points:
            yield a, b


def frobenius_permutation(ring: GaloisRing) -> np.ndarray:
    return np.concatenate([[0], (2 * np.arange(ring.n)) % ring.n + 1])


def affine_automorphism_check(code: Z4Code, ring: GaloisRing, a: RingElement, b: RingElement) -> bool:
    return is_automorphism(code, affine_permutation(ring, a, b))


def affine_invariance(code: Z4Code, ring: GaloisRing) -> Tuple[int, Optional[Tuple[str, str]]]:
    """Count of affine maps preserving the code, and the first that does not."""
    kept = 0
    for a, b in affine_maps(ring):
        if affine_automorphism_check(code, ring, a, b):
            kept += 1
        else:
            return kept, (str(a), str(b))
    return kept, None


def negation_invariant(code: Z4Code) -> bool:
    return bool(code.contains_rows((-code.generator) % 4).all()) if len(code.generator) else True


# -- linearity of the Gray image and the inclusion chain

def image_is_linear(code: Z4Code) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """φ(C) is linear iff 2α(a) ∗ α(b) ∈ C for all a, b; checked on residue generators."""
    residue = code.residue_code().astype(np.int64)
    for i, j in itertools.combinations_with_replacement(range(len(residue)), 2):
        word = 2 * (residue[i] * residue[j]) % 4
        if not code.contains(word):
            return False, (i, j)
    return True, None


def contained_in(inner: Z4Code, outer: Z4Code) -> bool:
    if len(inner.generator) == 0:
        return True
    return bool(outer.contains_rows(inner.generator).all())


def inclusion_chain(m: int) -> List[Tuple[str, bool]]:
    """ZRM(1,m) ⊆ 𝒦 ⊆ ZRM(2,m) ⊆ ZRM(2,m)⊥ ⊆ 𝒫 ⊆ ZRM(1,m)⊥ link by link, cyclic coordinates."""
    zrm1 = zrm(1, m, order="cyclic")
    zrm2 = zrm(2, m, order="cyclic")
    chain = [
        ("ZRM(1,m)", zrm1),
        ("K", kerdock(m)),
        ("ZRM(2,m)", zrm2),
        ("ZRM(2,m)^perp", zrm2.dual()),
        ("P", preparata(m)),
        ("ZRM(1,m)^perp", zrm1.dual()),
    ]
    return [
        (f"{name_a} <= {name_b}", contained_in(code_a, code_b))
        for (name_a, code_a), (name_b, code_b) in zip(chain, chain[1:])
    ]


def frobenius_invariant(code: Z4Code, ring: GaloisRing) -> bool:
    return is_automorphism(code, frobenius_permutation(ring))
