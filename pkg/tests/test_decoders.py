import numpy as np
import pytest

from core.errors import LengthMismatchError, ParameterError
from core.ring import get_ring
from core.z4 import LEE_WEIGHTS, Z4Vector
from services.codes import preparata
from services.cosets import _patterns
from services.decoders import (
    batch_decode,
    brute_force_nearest,
    correlation,
    family_a_correlations,
    fht,
    kerdock_candidates,
    kerdock_soft_decode,
    kerdock_soft_decode_brute,
    preparata_decode,
)

QPSK = np.array([1, 1j, -1, -1j])


def _error_string(e):
    return "".join(str(int(x)) for x in e)


def test_clean_word_has_no_error(p3):
    result = preparata_decode(Z4Vector.zeros(8))
    assert result.status == "no-error"
    assert result.codeword == "00000000"


def test_preparata_m3_exhaustive(p3):
    words = p3.codewords()
    errors = _patterns(8, 2)[1:].astype(np.int64)
    for c in words[::16]:
        for e in errors:
            result = preparata_decode(Z4Vector((c + e) % 4))
            assert result.status == "corrected"
            assert result.error == _error_string(e)
            assert result.codeword == _error_string(c)
            assert result.applied_weight == int(LEE_WEIGHTS[e].sum())


def test_preparata_m3_weight_three_is_detected(p3):
    words = p3.codewords()
    for e in _patterns(8, 3).astype(np.int64):
        if LEE_WEIGHTS[e].sum() != 3:
            continue
        v = (words[5] + e) % 4
        assert preparata_decode(Z4Vector(v)).status == "detected-uncorrectable"


@pytest.mark.slow
def test_preparata_m3_agrees_with_nearest_codeword(p3):
    words = p3.codewords()
    for e in _patterns(8, 3)[1:].astype(np.int64):
        weight = int(LEE_WEIGHTS[e].sum())
        for i, c in enumerate(words):
            v = (c + e) % 4
            result = preparata_decode(Z4Vector(v))
            distance, nearest = brute_force_nearest(words, v)
            if weight <= 2:
                assert (distance, list(nearest)) == (weight, [i])
                assert result.status == "corrected"
                assert result.codeword == _error_string(c)
            else:
                # d = 6, so no codeword lies within Lee distance 2 of v
                assert distance == 3 and i in nearest
                assert result.status == "detected-uncorrectable"
                assert result.codeword is None


@pytest.mark.slow
def test_preparata_m5_singles_and_doubles(rng):
    p = preparata(5)
    words = p.encode_rows(rng.integers(0, 4, size=(20, p.k1)))
    for c in words:
        for pos in range(32):
            for value in (1, 2, 3):
                e = np.zeros(32, dtype=np.int64)
                e[pos] = value
                result = preparata_decode(Z4Vector((c + e) % 4))
                assert result.error == _error_string(e)
    for _ in range(300):
        c = words[rng.integers(0, len(words))]
        e = np.zeros(32, dtype=np.int64)
        e[rng.choice(32, size=2, replace=False)] = rng.choice([1, 3], size=2)
        result = preparata_decode(Z4Vector((c + e) % 4))
        assert result.status == "corrected"
        assert result.error == _error_string(e)


def test_preparata_length_checks():
    with pytest.raises(LengthMismatchError):
        preparata_decode(Z4Vector.zeros(10))
    with pytest.raises(ParameterError):
        preparata_decode(Z4Vector.zeros(16))


def test_fht_small():
    assert np.allclose(fht([1, 0, 0, 0]), [1, 1, 1, 1])
    assert np.allclose(fht([1, 1, 1, 1]), [4, 0, 0, 0])
    with pytest.raises(ParameterError):
        fht([1, 2, 3])


def test_soft_decoder_noiseless(ring3, octa):
    for c in octa.codewords()[::7]:
        decision = kerdock_soft_decode(ring3, QPSK[c])
        assert decision.codeword == _error_string(c)
        assert decision.score == pytest.approx(8.0)


def test_soft_decoder_matches_exhaustive(ring3, rng):
    candidates = kerdock_candidates(ring3)
    assert len({row.tobytes() for row in candidates}) == 256
    for _ in range(200):
        sent = candidates[rng.integers(0, 256)]
        received = QPSK[sent] + 0.8 * (rng.standard_normal(8) + 1j * rng.standard_normal(8))
        fast = kerdock_soft_decode(ring3, received)
        slow = kerdock_soft_decode_brute(ring3, received, candidates)
        assert fast.codeword == slow.codeword or fast.score == pytest.approx(slow.score)


def test_soft_decoder_tie_rule(ring3):
    # all-zero input ties every candidate; the first in (r, s, δ) order has r = s = ∞, δ = 0
    decision = kerdock_soft_decode(ring3, np.zeros(8))
    assert (decision.r, decision.s, decision.delta) == (None, None, 0)
    assert decision.codeword == "00000000"


def test_soft_decoder_corrects_one_symbol(ring3, octa):
    c = octa.codewords()[100]
    v = c.copy()
    v[2] = (v[2] + 1) % 4
    decision = kerdock_soft_decode(ring3, QPSK[v])
    assert decision.codeword == _error_string(c)


def test_correlation():
    z = correlation(Z4Vector.parse("0123"), Z4Vector.zeros(4))
    assert (z.real, z.imag) == (0, 0)
    assert correlation(Z4Vector.parse("1111"), Z4Vector.parse("1111")).norm == 16


@pytest.mark.parametrize("m", [3, 5])
def test_family_a(m):
    assert set(family_a_correlations(get_ring(m))) == {2 ** m}


def test_brute_force_nearest(p3):
    words = p3.codewords()
    v = words[9].copy()
    v[0] = (v[0] + 2) % 4
    distance, indices = brute_force_nearest(words, v)
    assert distance == 2
    assert list(indices) == [9]


def test_batch_decode_keeps_order(p3):
    words = [Z4Vector(w) for w in p3.codewords()[:20]]
    serial = batch_decode(preparata_decode, words, workers=1)
    pooled = batch_decode(preparata_decode, words, workers=4)
    assert [r.codeword for r in serial] == [r.codeword for r in pooled]
