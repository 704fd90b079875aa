"""Coset leaders, covering radius and outer distributions through syndromes."""
import itertools
import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.settings import get_settings
from core.errors import ParameterError, ResourceCapError
from core.z4 import LEE_WEIGHTS, Z4Vector
from services.codes import Z4Code

logger = logging.getLogger(__name__)
settings = get_settings()


def _keys(syndromes: np.ndarray) -> np.ndarray:
    weights = 4 ** np.arange(syndromes.shape[1], dtype=np.int64)
    return syndromes @ weights


class CosetTable:
    """Minimum Lee weight leader for every syndrome, found breadth first.

    Moving from a syndrome by ±H[:, k] adds Lee weight 1, so layer j of the
    search holds exactly the cosets whose minimum weight is j.
    """

    def __init__(self, code: Z4Code):
        self.code = code
        H = code.parity_check
        rows, n = H.shape[0], code.length
        count = 4 ** n // code.size
        if count > settings.syndrome_cap or rows > 31:
            raise ResourceCapError(f"{code.describe()} has {count} cosets, over the cap {settings.syndrome_cap}")

        visited = np.zeros(1, dtype=np.int64)
        key_parts = [visited]
        leader_parts = [np.zeros((1, n), dtype=np.int8)]
        self.layer_sizes = [1]
        frontier_syn = np.zeros((1, rows), dtype=np.int64)
        frontier_vec = np.zeros((1, n), dtype=np.int8)

        while len(frontier_syn):
            layer_keys = np.zeros(0, dtype=np.int64)
            new_syn, new_vec = [], []
            for k in range(n):
                for step in (1, 3):
                    syn = (frontier_syn + step * H[:, k]) % 4
                    keys, first = np.unique(_keys(syn), return_index=True)
                    keep = ~np.isin(keys, visited) & ~np.isin(keys, layer_keys)
                    if not keep.any():
                        continue
                    idx = first[keep]
                    vec = frontier_vec[idx].copy()
                    vec[:, k] = (vec[:, k] + step) % 4
                    new_syn.append(syn[idx])
                    new_vec.append(vec)
                    layer_keys = np.concatenate([layer_keys, keys[keep]])
            if not new_syn:
                break
            frontier_syn = np.concatenate(new_syn)
            frontier_vec = np.concatenate(new_vec)
            key_parts.append(layer_keys)
            leader_parts.append(frontier_vec)
            visited = np.union1d(visited, layer_keys)
            self.layer_sizes.append(len(layer_keys))

        keys = np.concatenate(key_parts)
        order = np.argsort(keys)
        self._keys = keys[order]
        self._leaders = np.concatenate(leader_parts)[order]
        self._weights = np.repeat(np.arange(len(self.layer_sizes)), self.layer_sizes)[order]
        if len(self._keys) != count:
            raise ArithmeticError(f"found {len(self._keys)} cosets, expected {count}")
        logger.info(f"{code.describe()}: {count} cosets, covering radius {self.covering_radius}")

    @property
    def covering_radius(self) -> int:
        return len(self.layer_sizes) - 1

    def __len__(self) -> int:
        return len(self._keys)

    def _index(self, v) -> int:
        symbols = v.symbols if isinstance(v, Z4Vector) else np.asarray(v, dtype=np.int64)
        key = _keys(self.code.syndrome_rows(symbols))[0]
        return int(np.searchsorted(self._keys, key))

    def leader(self, v) -> Z4Vector:
        """Minimum Lee weight vector in the coset of v."""
        return Z4Vector(self._leaders[self._index(v)].astype(np.int64))

    def weight(self, v) -> int:
        return int(self._weights[self._index(v)])

    def leaders(self, weight: Optional[int] = None) -> np.ndarray:
        if weight is None:
            return self._leaders.astype(np.int64)
        return self._leaders[self._weights == weight].astype(np.int64)


def covering_radius(code: Z4Code) -> int:
    return CosetTable(code).covering_radius


def coset_distribution(code: Z4Code, leader) -> List[int]:
    """Lee weight distribution of x + C, the outer-distribution row of the coset of x."""
    leader = leader.symbols if isinstance(leader, Z4Vector) else np.asarray(leader, dtype=np.int64)
    counts = np.zeros(2 * code.length + 1, dtype=np.int64)
    for block in code.iter_codewords():
        weights = LEE_WEIGHTS[(block + leader[None, :]) % 4].sum(axis=1)
        counts += np.bincount(weights, minlength=2 * code.length + 1)
    return counts.tolist()


def outer_distribution(table: CosetTable) -> Dict[Tuple[int, ...], int]:
    """Distinct outer-distribution rows with the number of cosets sharing each."""
    rows: Counter = Counter()
    for leader in table.leaders():
        rows[tuple(coset_distribution(table.code, leader))] += 1
    return dict(rows)


def _patterns(length: int, radius: int) -> np.ndarray:
    """Every vector of ℤ₄^length with Lee weight at most ``radius``."""
    blocks = [np.zeros((1, length), dtype=np.int8)]
    for support in range(1, radius + 1):
        positions = np.array(list(itertools.combinations(range(length), support)), dtype=np.int64)
        for values in itertools.product((1, 3, 2), repeat=support):
            if LEE_WEIGHTS[list(values)].sum() > radius:
                continue
            block = np.zeros((len(positions), length), dtype=np.int8)
            np.put_along_axis(block, positions, np.array(values, dtype=np.int8)[None, :], axis=1)
            blocks.append(block)
    return np.concatenate(blocks, axis=0)


def minimum_lee_distance_by_syndromes(code: Z4Code, radius: int) -> Optional[int]:
    """Minimum Lee distance from syndrome collisions among patterns of weight ≤ radius.

    Two patterns with the same syndrome differ by a codeword, and every
    codeword of weight d ≤ 2·radius splits into such a pair. Returns None
    when the distance exceeds 2·radius.
    """
    if radius < 1:
        raise ParameterError("radius must be positive")
    patterns = _patterns(code.length, radius)
    chunk = settings.chunk_size
    keys = np.concatenate([
        _keys(code.syndrome_rows(patterns[lo : lo + chunk].astype(np.int64)))
        for lo in range(0, len(patterns), chunk)
    ])
    order = np.argsort(keys, kind="stable")
    keys, patterns = keys[order], patterns[order]
    best: Optional[int] = None
    offset = 1
    while offset < len(keys):
        same = keys[offset:] == keys[:-offset]
        if not same.any():
            break
        upper = patterns[offset:][same].astype(np.int64)
        lower = patterns[:-offset][same].astype(np.int64)
        d = int(LEE_WEIGHTS[(upper - lower) % 4].sum(axis=1).min())
        best = d if best is None else min(best, d)
        offset += 1
    logger.debug(f"{code.describe()}: {len(patterns)} patterns, distance {best}")
    return best if best is not None and best <= 2 * radius else None
