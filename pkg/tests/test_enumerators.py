import numpy as np
import pytest

from core.enumerators import (
    WeightEnumerator,
    binary_macwilliams,
    convert,
    enumerator,
    enumerator_from_rows,
    krawtchouk,
    macwilliams,
)
from core.errors import NonIntegralEnumeratorError, ParameterError
from core.z4 import Z4Vector, gray_map_rows
from services.codes import delsarte_goethals, goethals, octacode, qrm, zrm


def test_octacode_symmetrized_enumerator(octa):
    swe = enumerator_from_rows(octa.codewords(), "swe")
    assert swe.terms == {
        (8, 0, 0): 1,
        (0, 8, 0): 16,
        (0, 0, 8): 1,
        (4, 0, 4): 14,
        (3, 4, 1): 112,
        (1, 4, 3): 112,
    }


def test_octacode_is_formally_self_dual(octa):
    for flavor in ("cwe", "swe", "lee", "hamming"):
        e = enumerator_from_rows(octa.codewords(), flavor)
        assert macwilliams(e, 256) == e


def test_kerdock_lee_enumerator_maps_to_preparata(k3, p3):
    lee_k = enumerator_from_rows(k3.codewords(), "lee")
    lee_p = enumerator_from_rows(p3.codewords(), "lee")
    assert macwilliams(lee_k, k3.size) == lee_p
    assert binary_macwilliams(lee_k.distribution(), k3.size) == lee_p.distribution()


def test_lee_distribution_of_octacode(octa):
    dist = enumerator_from_rows(octa.codewords(), "lee").distribution()
    assert dist[0] == 1 and dist[6] == 112 and dist[8] == 30 and dist[10] == 112 and dist[16] == 1
    assert sum(dist) == 256


def test_streaming_enumerator_matches_rows(octa):
    words = [Z4Vector(row) for row in octa.codewords()]
    assert enumerator(words, "cwe") == enumerator_from_rows(octa.codewords(), "cwe")


def test_json_round_trip(octa):
    e = enumerator_from_rows(octa.codewords(), "swe")
    assert WeightEnumerator.from_json(e.to_json()) == e


def test_macwilliams_rejects_wrong_size(octa):
    e = enumerator_from_rows(octa.codewords(), "lee")
    with pytest.raises(NonIntegralEnumeratorError):
        macwilliams(e, 512)


def test_repetition_code_dual():
    # the dual of {0000, 1111, 2222, 3333} has 64 words
    rows = [[c] * 4 for c in range(4)]
    dual = macwilliams(enumerator_from_rows(rows, "hamming"), 4)
    assert dual.size == 64
    assert dual.distribution()[0] == 1


def test_krawtchouk_values():
    assert krawtchouk(0, 3, 16) == 1
    assert krawtchouk(1, 0, 16) == 16
    assert krawtchouk(1, 16, 16) == -16


def test_bad_flavor():
    with pytest.raises(ParameterError):
        WeightEnumerator("complete", 2, {})


@pytest.mark.parametrize("make", [lambda: zrm(1, 3), lambda: zrm(2, 3), lambda: qrm(0, 3)])
@pytest.mark.parametrize("flavor", ["cwe", "lee"])
def test_macwilliams_twice_is_identity(make, flavor):
    code = make()
    e = enumerator_from_rows(code.codewords(), flavor)
    dual = macwilliams(e, code.size)
    assert macwilliams(dual, 4 ** code.length // code.size) == e


@pytest.mark.parametrize(
    "make",
    [octacode, lambda: zrm(1, 3), lambda: zrm(2, 3), lambda: qrm(2, 3), lambda: goethals(3), lambda: delsarte_goethals(5, 1)],
)
def test_lee_and_hamming_enumerators_agree(make):
    code = make()
    rows = code.codewords()
    cwe = enumerator_from_rows(rows, "cwe")
    lee = enumerator_from_rows(rows, "lee")
    assert convert(cwe, "lee") == lee
    assert convert(cwe, "hamming") == enumerator_from_rows(rows, "hamming")
    # the Lee distribution is the Hamming distribution of the Gray image
    image_weights = gray_map_rows(rows).sum(axis=1).astype(np.int64)
    assert np.bincount(image_weights, minlength=2 * code.length + 1).tolist() == lee.distribution()
