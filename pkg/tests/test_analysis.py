import numpy as np
import pytest

from config.settings import get_settings
from core.errors import ParameterError
from core.z4 import gray_map_rows
from services import analysis
from services.codes import delsarte_goethals, goethals, kerdock, preparata, zrm


@pytest.mark.parametrize("m", [3, 4])
def test_kerdock_distribution_matches_formula(m):
    code = kerdock(m, allow_even=(m % 2 == 0))
    assert analysis.weight_distribution(code).counts == analysis.kerdock_weight_formula(m)


@pytest.mark.slow
def test_kerdock_distribution_m5():
    assert analysis.weight_distribution(kerdock(5)).counts == analysis.kerdock_weight_formula(5)


def test_kerdock_formula_m4_values():
    assert analysis.kerdock_weight_formula(4) == {0: 1, 12: 240, 16: 542, 20: 240, 32: 1}


def test_preparata_distribution_m3(p3):
    dist = analysis.weight_distribution(p3)
    assert dist.minimum_distance == 6
    assert dist.counts[6] == 112


def test_macwilliams_fallback(monkeypatch):
    code = delsarte_goethals(3, 1)
    enumerated = analysis.weight_distribution(code)
    monkeypatch.setattr(get_settings(), "enumeration_cap", 1000)
    via_dual = analysis.weight_distribution(code)
    assert via_dual.source == "macwilliams"
    assert via_dual.counts == enumerated.counts


def test_hamming_metric(octa):
    dist = analysis.weight_distribution(octa, "hamming")
    assert sum(dist.counts.values()) == 256
    assert dist.counts == {0: 1, 4: 14, 5: 112, 7: 112, 8: 17}


def test_hamming_metric_counts_symbols_not_image_bits(octa):
    symbols = analysis.weight_distribution(octa, "hamming").counts
    image = np.bincount(gray_map_rows(octa.codewords()).sum(axis=1).astype(np.int64)).tolist()
    assert image == [analysis.weight_distribution(octa, "lee").counts.get(w, 0) for w in range(17)]
    assert symbols != {w: c for w, c in enumerate(image) if c}


def test_unknown_metric(octa):
    with pytest.raises(ParameterError):
        analysis.weight_distribution(octa, "euclid")


def test_distance_invariance(octa):
    ok, pair = analysis.distance_invariance_check(gray_map_rows(octa.codewords()))
    assert ok and pair is None
    ok, pair = analysis.distance_invariance_check(np.array([[0, 0, 0], [1, 0, 0], [1, 1, 1]]))
    assert not ok and pair == (0, 1)


def test_designs_in_gray_images(p3):
    design = analysis.design_check(analysis.blocks_of_weight(gray_map_rows(p3.codewords()), 6), 3, 16)
    assert design.holds and (design.blocks, design.lam) == (112, 4)
    steiner = analysis.design_check(analysis.blocks_of_weight(gray_map_rows(zrm(2, 3).codewords()), 4), 3, 16)
    assert steiner.holds and (steiner.blocks, steiner.lam) == (140, 1)


def test_design_failure_witness():
    blocks = [frozenset({0, 1}), frozenset({0, 2})]
    check = analysis.design_check(blocks, 2, 3)
    assert not check.holds
    assert check.witness == [1, 2]


def test_design_with_no_blocks():
    check = analysis.design_check([], 3, 16)
    assert not check.holds
    assert (check.blocks, check.lam, check.witness) == (0, None, None)
    assert analysis.design_check(analysis.blocks_of_weight(np.zeros((1, 16), dtype=np.int64), 6), 3, 16).blocks == 0


@pytest.mark.parametrize("make", [lambda: kerdock(3), lambda: preparata(3), lambda: goethals(3)])
def test_affine_frobenius_negation(make, ring3):
    code = make()
    kept, failure = analysis.affine_invariance(code, ring3)
    assert kept == 56 and failure is None
    assert analysis.frobenius_invariant(code, ring3)
    assert analysis.negation_invariant(code)


def test_transposition_is_not_an_automorphism(k3):
    perm = list(range(8))
    perm[1], perm[2] = 2, 1
    assert not analysis.is_automorphism(k3, perm)


def test_affine_permutation_identity(ring3):
    perm = analysis.affine_permutation(ring3, ring3.one(), ring3.zero())
    assert list(perm) == list(range(8))


def test_affine_map_rejects_non_teichmuller(ring3):
    with pytest.raises(ParameterError):
        analysis.affine_permutation(ring3, ring3.scalar(3), ring3.zero())


def test_gray_image_linearity(p3):
    linear, pair = analysis.image_is_linear(p3)
    assert not linear and pair is not None
    assert analysis.image_is_linear(zrm(1, 3))[0]


def test_inclusion_chain_m3():
    links = dict(analysis.inclusion_chain(3))
    assert links["ZRM(1,m) <= K"]
    assert links["K <= ZRM(2,m)"]
    assert links["P <= ZRM(1,m)^perp"]


@pytest.mark.slow
def test_inclusion_chain_m5():
    assert all(holds for _, holds in analysis.inclusion_chain(5))


def test_affine_automorphism_check(p3, ring3):
    a, b = ring3.xi(3), ring3.xi(1)
    assert analysis.affine_automorphism_check(p3, ring3, a, b)
    assert analysis.affine_automorphism_check(p3, ring3, ring3.one(), ring3.zero())
