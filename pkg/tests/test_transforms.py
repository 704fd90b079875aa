import json

import numpy as np
import pytest

from core.errors import LengthMismatchError, MalformedInputError, ParameterError
from core.ring import get_ring
from core.z4 import all_vectors, gray_map_rows
from services.codes import goethals, preparata, qrm
from services.transforms import (
    dg_transform_conditions,
    field_coefficients,
    field_transform,
    goethals_member,
    goethals_member_binary,
    goethals_member_binary_rows,
    goethals_member_original,
    goethals_member_original_rows,
    half_convolution,
    half_convolution_via_ring,
    inverse_ring_transform,
    preparata_member_binary,
    preparata_member_binary_rows,
    preparata_member_classical,
    preparata_member_classical_rows,
    preparata_member_z4,
    preparata_member_z4_rows,
    qrm_spectral_member,
    qrm_spectral_rows,
    ring_transform,
    spectrum_from_json,
    spectrum_to_json,
    split_binary,
)


@pytest.fixture(scope="module")
def words():
    return all_vectors(8)


@pytest.fixture(scope="module")
def halves(words):
    return split_binary(gray_map_rows(words))


def test_inverse_transform(ring3, rng):
    for _ in range(5):
        c = rng.integers(0, 4, size=7)
        assert np.array_equal(inverse_ring_transform(ring3, ring_transform(ring3, c)), c)


@pytest.mark.parametrize("m", [5, pytest.param(7, marks=pytest.mark.slow)])
def test_inverse_transform_larger_rings(m, rng):
    ring = get_ring(m)
    for _ in range(3):
        c = rng.integers(0, 4, size=ring.n)
        assert np.array_equal(inverse_ring_transform(ring, ring_transform(ring, c)), c)


def test_ring_transform_is_linear(ring3, ring5, rng):
    for ring in (ring3, ring5):
        a = rng.integers(0, 4, size=ring.n)
        b = rng.integers(0, 4, size=ring.n)
        sa, sb = ring_transform(ring, a), ring_transform(ring, b)
        combined = ring_transform(ring, (a + 3 * b) % 4)
        assert all(s == x + 3 * y for s, x, y in zip(combined, sa, sb))


@pytest.mark.parametrize("m", [3, 5])
def test_transform_of_all_ones(m):
    ring = get_ring(m)
    spectrum = ring_transform(ring, np.ones(ring.n, dtype=np.int64))
    assert spectrum[0] == ring.scalar(ring.n % 4)
    assert all(s.is_zero() for s in spectrum[1:])


@pytest.mark.parametrize("m", [3, 5])
def test_transform_of_delta(m):
    ring = get_ring(m)
    delta = np.zeros(ring.n, dtype=np.int64)
    delta[0] = 1
    assert all(s == ring.one() for s in ring_transform(ring, delta))


def test_field_spectrum_conjugacy(ring3, ring5, rng):
    for ring in (ring3, ring5):
        GF = ring.field
        for _ in range(5):
            spectrum = field_transform(ring, rng.integers(0, 2, size=ring.n))
            for lam in range(ring.n):
                assert GF(int(spectrum[(2 * lam) % ring.n])) == GF(int(spectrum[lam])) ** 2


def test_spectrum_json(ring3):
    c = np.array([1, 0, 2, 3, 0, 0, 1])
    spectrum = ring_transform(ring3, c)
    text = spectrum_to_json(spectrum)
    values = json.loads(text)
    assert len(values) == 7 and all(len(v) == 3 and set(v) <= set("0123") for v in values)
    assert values[0] == str(ring3.scalar(7))
    assert spectrum_from_json(ring3, text) == spectrum


def test_spectrum_json_rejects_objects(ring3):
    with pytest.raises(MalformedInputError):
        spectrum_from_json(ring3, '{"0": "100"}')
    with pytest.raises(MalformedInputError):
        spectrum_from_json(ring3, '["1000"]')


def test_field_transform_agrees_with_coefficients(ring3, rng):
    a = rng.integers(0, 2, size=7)
    spectrum = field_transform(ring3, a)
    for lam in range(7):
        assert spectrum[lam] == field_coefficients(ring3, a, lam)[0]


def test_half_convolution_from_ring_transform(ring3, ring5, rng):
    for ring in (ring3, ring5):
        for _ in range(5):
            a = rng.integers(0, 2, size=ring.n)
            spectrum = field_transform(ring, a)
            for lam in (0, 1, 3):
                assert half_convolution(ring, spectrum, lam) == half_convolution_via_ring(ring, a, lam)


def test_preparata_ring_transform_membership(ring3, words):
    assert np.array_equal(preparata_member_z4_rows(ring3, words), preparata(3).contains_rows(words))


def test_preparata_binary_membership(ring3, words, halves):
    b, ab = halves
    expected = preparata(3).contains_rows(words)
    assert np.array_equal(preparata_member_binary_rows(ring3, b, ab), expected)
    assert np.array_equal(preparata_member_classical_rows(ring3, b, ab), expected)


def test_single_word_membership(ring5, rng):
    p = preparata(5)
    info = rng.integers(0, 4, size=p.k1)
    word = p.encode(info).symbols
    assert preparata_member_z4(ring5, word)
    b, ab = split_binary(gray_map_rows(word))
    assert preparata_member_binary(ring5, b, ab)
    word[3] = (word[3] + 1) % 4
    assert not preparata_member_z4(ring5, word)


def test_goethals_transform_membership(ring3, words, halves):
    b, ab = halves
    expected = goethals(3).contains_rows(words)
    assert np.array_equal(dg_transform_conditions(ring3, words, 1), expected)
    assert np.array_equal(goethals_member_binary_rows(ring3, b, ab), expected)


def test_binary_goethals_code_size(ring3, halves):
    b, ab = halves
    assert int(goethals_member_original_rows(ring3, b, ab).sum()) == 32


@pytest.mark.parametrize("r", range(0, 4))
def test_qrm_spectral_counts(ring3, words, r):
    assert int(qrm_spectral_rows(ring3, words, r).sum()) == qrm(r, 3).size


def test_qrm_spectral_membership_matches_code(ring3, words):
    assert np.array_equal(qrm_spectral_rows(ring3, words, 2), qrm(2, 3).contains_rows(words))


def test_length_checks(ring3):
    with pytest.raises(LengthMismatchError):
        preparata_member_z4_rows(ring3, np.zeros((1, 7), dtype=np.int64))
    with pytest.raises(ParameterError):
        dg_transform_conditions(ring3, np.zeros((1, 8), dtype=np.int64), 2)


def test_single_word_goethals_membership(ring3, rng):
    code = goethals(3)
    info = np.concatenate([rng.integers(0, 4, size=code.k1), rng.integers(0, 2, size=code.k2)])
    word = code.encode(info).symbols
    assert goethals_member(ring3, word)
    b, ab = split_binary(gray_map_rows(word))
    assert goethals_member_binary(ring3, b, ab)
    assert preparata_member_classical(ring3, b, ab)


def test_single_word_binary_goethals(ring3, halves):
    b, ab = halves
    mask = goethals_member_original_rows(ring3, b, ab)
    inside, outside = np.flatnonzero(mask)[1], np.flatnonzero(~mask)[0]
    assert goethals_member_original(ring3, b[inside], ab[inside])
    assert not goethals_member_original(ring3, b[outside], ab[outside])


def test_single_word_qrm_membership(ring3):
    word = qrm(1, 3).generator[0]
    assert qrm_spectral_member(ring3, word, 1)
    assert qrm_spectral_member(ring3, np.zeros(8, dtype=np.int64), 0)
    assert not qrm_spectral_member(ring3, np.eye(8, dtype=np.int64)[0], 2)
