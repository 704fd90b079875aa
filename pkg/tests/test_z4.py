import itertools

import numpy as np
import pytest

from core.errors import LengthMismatchError, MalformedInputError
from core.z4 import (
    BinaryVector,
    Z4Vector,
    alpha_beta_gamma,
    all_vectors,
    gray_carry_rule_holds,
    gray_inverse,
    gray_inverse_rows,
    gray_map,
    gray_map_rows,
    gray_sum_rule_holds,
    hamming_distance,
    lee_distance,
    lee_weight,
    z4_linearity_condition,
)
from services.simulation import CONSTELLATION


def test_gray_map_symbols():
    assert [str(gray_map(Z4Vector([c]))) for c in range(4)] == ["00", "01", "11", "10"]


def test_gray_map_vector():
    assert str(gray_map(Z4Vector.parse("1230"))) == "01101100"


def test_gray_inverse_undoes_gray_map():
    words = all_vectors(3)
    assert np.array_equal(gray_inverse_rows(gray_map_rows(words)), words)
    v = Z4Vector.parse("3120")
    assert gray_inverse(gray_map(v)) == v


def test_lee_weights():
    assert lee_weight(Z4Vector.parse("0123")) == 4
    assert lee_distance(Z4Vector.parse("00"), Z4Vector.parse("22")) == 4


def test_gray_map_is_isometry_exhaustive():
    words = all_vectors(3)
    for a, b in itertools.product(words[::5], words[::3]):
        u, v = Z4Vector(a), Z4Vector(b)
        assert hamming_distance(gray_map(u), gray_map(v)) == lee_distance(u, v)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_qpsk_squared_distance_is_twice_lee(n):
    words = all_vectors(n)
    points = CONSTELLATION[words]
    for a, s in zip(words, points):
        squared = np.abs(points - s) ** 2
        lee = [lee_distance(Z4Vector(a), Z4Vector(b)) for b in words]
        assert np.allclose(squared.sum(axis=1), 2 * np.array(lee))


def test_gray_rules_exhaustive_small():
    words = all_vectors(2)
    a = np.repeat(words, len(words), axis=0)
    b = np.tile(words, (len(words), 1))
    assert gray_sum_rule_holds(a, b).all()
    assert gray_carry_rule_holds(a, b).all()


def test_gray_rules_random(rng):
    a = rng.integers(0, 4, size=(2000, 8))
    b = rng.integers(0, 4, size=(2000, 8))
    assert gray_sum_rule_holds(a, b).all()
    assert gray_carry_rule_holds(a, b).all()


def test_vector_arithmetic():
    u, v = Z4Vector.parse("1230"), Z4Vector.parse("3333")
    assert str(u + v) == "0123"
    assert str(-u) == "3210"
    assert str(2 * u) == "2020"
    assert u.dot(v) == 2


def test_length_mismatch():
    with pytest.raises(LengthMismatchError):
        Z4Vector.parse("12") + Z4Vector.parse("123")
    with pytest.raises(LengthMismatchError):
        BinaryVector.parse("01") + BinaryVector.parse("011")


@pytest.mark.parametrize("text", ["", "124", "1a"])
def test_malformed_strings(text):
    with pytest.raises(MalformedInputError):
        Z4Vector.parse(text)


def test_swap():
    assert str(BinaryVector.parse("110100").swap()) == "100110"


def test_linearity_condition_accepts_z4_image():
    words = {str(gray_map(Z4Vector(w))) for w in all_vectors(1)}
    ok, witness = z4_linearity_condition([BinaryVector.parse(w) for w in words])
    assert ok and witness is None


def test_linearity_condition_rejects_non_image():
    # 01 + 01 + (11 ∗ 11) = 11 is missing
    code = [BinaryVector.parse("00"), BinaryVector.parse("01"), BinaryVector.parse("10")]
    ok, witness = z4_linearity_condition(code)
    assert not ok
    assert witness is not None


def test_alpha_beta_gamma():
    alpha, beta, gamma = alpha_beta_gamma(Z4Vector.parse("0123"))
    assert (str(alpha), str(beta), str(gamma)) == ("0101", "0011", "0110")
    assert gray_map(Z4Vector.parse("0123")) == BinaryVector.parse(str(beta) + str(gamma))
