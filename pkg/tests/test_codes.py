import numpy as np
import pytest

from core import z4poly
from core.errors import MalformedInputError, ParameterError
from core.z4 import Z4Vector, gray_map, gray_map_rows
from services.codes import (
    Z4Code,
    binary_codewords,
    binary_rank,
    build_code,
    delsarte_goethals,
    goethals,
    kerdock,
    kerdock_binary_form,
    kerdock_codeword,
    kerdock_cyclic_generator,
    kerdock_polynomial,
    octacode,
    preparata,
    preparata_span_witness,
    qrm,
    rm_generator,
    same_binary_code,
    same_code,
    zrm,
)

def test_standard_form_type():
    code = Z4Code([[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2]])
    assert (code.k1, code.k2) == (1, 2)
    assert code.type_string == "4^1 2^2"
    assert code.size == 16
    assert len({row.tobytes() for row in code.codewords()}) == 16


def test_parity_check_annihilates_code(k3):
    assert not (k3.codewords() @ k3.parity_check.T % 4).any()
    assert k3.dual().size * k3.size == 4 ** k3.length


def test_encode_and_contains(p3):
    u = np.zeros(p3.k1 + p3.k2, dtype=np.int64)
    assert p3.encode(u) == Z4Vector.zeros(8)
    word = p3.encode(np.array([1, 2, 3, 0]))
    assert p3.contains(word)
    assert not p3.syndrome(word).symbols.any()


def test_encode_rejects_bad_information(k3):
    with pytest.raises(MalformedInputError):
        k3.encode([1, 2, 3])
    with pytest.raises(MalformedInputError):
        k3.encode([1, 2, 3, 4])


def test_kerdock_m3_type_and_generators(k3):
    assert (k3.k1, k3.k2) == (4, 0)
    assert z4poly.to_string(kerdock_polynomial(3)) == "3121"
    cyclic = Z4Code(kerdock_cyclic_generator(3))
    assert same_code(k3, cyclic)


def test_kerdock_polynomial_m5_unscaled():
    assert z4poly.to_string(kerdock_polynomial(5, monic=False)) == "11120122010303133013212213"


def test_octacode_is_kerdock_m3(octa, k3):
    assert same_code(octa, k3)
    assert same_code(k3, preparata(3))


def test_kerdock_codeword_is_member(ring3, k3, rng):
    for _ in range(10):
        lam = ring3.element(rng.integers(0, 4, size=3))
        word = kerdock_codeword(ring3, lam, int(rng.integers(0, 4)))
        assert k3.contains(word)


def test_kerdock_binary_form_matches_planes(ring5, rng):
    for _ in range(5):
        lam = ring5.element(rng.integers(0, 4, size=5))
        eps = int(rng.integers(0, 4))
        word = kerdock_codeword(ring5, lam, eps)
        a, b = kerdock_binary_form(ring5, lam, eps)
        assert np.array_equal(a, word.alpha)
        assert np.array_equal(b, word.beta)


def test_preparata_type():
    p = preparata(5)
    assert p.length == 32
    assert (p.k1, p.k2) == (26, 0)
    assert p.size == 4 ** 32 // 4 ** 6


@pytest.mark.parametrize("r", [1, 2])
def test_zrm_gray_image_is_reed_muller(r):
    image = {row.tobytes() for row in gray_map_rows(zrm(r, 3).codewords())}
    reference = {row.tobytes() for row in binary_codewords(rm_generator(r, 4))}
    assert image == reference


def test_qrm_small_members(ring3):
    assert qrm(0, 3).size == 4
    assert same_code(qrm(1, 3), kerdock(3))
    assert qrm(-1, 3).size == 1
    assert qrm(3, 3).size == 4 ** 8


@pytest.mark.parametrize("r", range(-1, 4))
def test_qrm_duality_m3(r):
    assert same_code(qrm(r, 3).dual(), qrm(3 - r - 1, 3))


@pytest.mark.parametrize("r", range(0, 4))
def test_qrm_residue_is_cyclic_reed_muller(r, ring3):
    assert same_binary_code(qrm(r, 3).residue_code(), rm_generator(r, 3, "cyclic", ring3))


def test_goethals_m3():
    g = goethals(3)
    assert g.size == 32
    assert g.family == "goethals"
    assert delsarte_goethals(3, 1).size * g.size == 4 ** 8


def test_delsarte_goethals_rejects_r():
    with pytest.raises(ParameterError):
        delsarte_goethals(5, 3)


def test_kerdock_even_needs_flag():
    with pytest.raises(ParameterError):
        kerdock(4)
    assert kerdock(4, allow_even=True).size == 4 ** 5


def test_span_witness_leaves_preparata():
    a, b, w = preparata_span_witness(5)
    p = preparata(5)
    assert p.contains(a) and p.contains(b)
    assert not p.contains(w)
    assert gray_map(w).weight() == 2
    assert gray_map(a) + gray_map(b) + gray_map(a + b) == gray_map(w)


def test_duals_carry_the_family():
    assert preparata(3).dual().family == "kerdock"
    assert kerdock(5).dual().family == "preparata"
    assert octacode().dual().family == "octacode"
    assert goethals(5).dual().describe() == "dg(m=5, r=1)"
    assert delsarte_goethals(5, 1).dual().family == "goethals"
    assert delsarte_goethals(7, 2).dual().family == "generic"
    assert zrm(1, 3).dual().family == "generic"


@pytest.mark.parametrize("r", [0, 1, 2])
def test_qrm_dual_is_tagged_with_complementary_order(r):
    dual = qrm(r, 3).dual()
    assert (dual.family, dual.r) == ("qrm", 3 - r - 1)


@pytest.mark.parametrize("family, m, r", [("kerdock", 3, None), ("zrm", 3, 1), ("qrm", 3, 2), ("goethals", 3, None)])
def test_build_code(family, m, r):
    assert build_code(family, m, r).length == 8


def test_build_code_unknown():
    with pytest.raises(ParameterError):
        build_code("golay", 3)


@pytest.mark.parametrize("make, ranks", [(lambda: preparata(3), (4, 4)), (lambda: goethals(3), (1, 4))])
def test_residue_and_torsion_codes(make, ranks):
    code = make()
    residue, torsion = code.residue_code(), code.torsion_code()
    assert (binary_rank(residue), binary_rank(torsion)) == ranks
    assert code.contains_rows(2 * torsion.astype(np.int64)).all()
