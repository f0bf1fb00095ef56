import numpy as np
import pytest

from src.approx import CanonicalBank, TextSketchHD, approx_query_text_updates, decompose_window
from src.approx.canonical import repetitions_for
from src.core.data_models import Alphabet, DynamicString, StringRole, Update
from src.core.exceptions import UpdateModelViolationError
from src.oracle.naive import naive_hd

from tests.strings import apply_to_mirror, random_update


def test_decompose_window_example():
    assert decompose_window(3, 8, 3) == [(0, 3), (2, 4), (1, 8), (0, 10)]


@pytest.mark.parametrize("m", [1, 5, 8, 13])
def test_decompose_window_is_aligned_and_short(m):
    top = m.bit_length() - 1
    for start in range(40):
        pieces = decompose_window(start, m, top)
        assert sum(1 << k for k, _ in pieces) == m
        assert all(pos % (1 << k) == 0 for k, pos in pieces)
        for k in range(top + 1):
            assert sum(1 for level, _ in pieces if level == k) <= 2
        assert pieces[0][1] == start


def test_repetitions_for():
    assert repetitions_for(2) == 1
    assert repetitions_for(16) == 6


def test_text_updates_track_true_distance(rng, make_pair):
    alphabet = Alphabet.constant(4)
    pattern, text = make_pair(16, 48, alphabet)
    st = TextSketchHD(pattern, text, epsilon=0.5, seed=2, c_d=64.0)
    mirror = {StringRole.PATTERN: pattern.snapshot(), StringRole.TEXT: text.snapshot()}
    for _ in range(60):
        u = random_update(rng, 16, 48, alphabet, (StringRole.TEXT,))
        st.update(u)
        apply_to_mirror(mirror, u)
    for i in range(1, 34):
        truth = naive_hd(mirror[StringRole.PATTERN], mirror[StringRole.TEXT], i)
        estimate = approx_query_text_updates(st, i)
        assert abs(estimate - truth) <= 0.5 * truth
        assert st.blocks_last_query <= 2 * st.bank.levels


def test_zero_distance_reads_zero(rng):
    alphabet = Alphabet.binary()
    text = DynamicString(rng.integers(0, 2, size=40), alphabet)
    pattern = text.slice(12, 11).copy(StringRole.PATTERN)
    st = TextSketchHD(pattern, text, epsilon=0.25, seed=9)
    assert st.query(12) == 0.0
    st.update(Update.text(15, 1 - text[15]))
    st.update(Update.text(15, 1 - text[15]))
    assert st.query(12) == 0.0


def test_pattern_updates_rejected(make_pair):
    pattern, text = make_pair(4, 12)
    st = TextSketchHD(pattern, text, epsilon=0.5, seed=0)
    with pytest.raises(UpdateModelViolationError):
        st.update(Update.pattern(1, 0))


@pytest.mark.parametrize("alphabet", [Alphabet.binary(), Alphabet.constant(4)], ids=["binary", "unary"])
def test_text_updates_leave_the_bank_as_a_fresh_build(rng, make_pair, alphabet):
    m, n = 13, 50
    pattern, text = make_pair(m, n, alphabet)
    st = TextSketchHD(pattern, text, epsilon=0.5, seed=8)
    mirror = {StringRole.PATTERN: pattern.snapshot(), StringRole.TEXT: text.snapshot()}
    for _ in range(80):
        u = random_update(rng, m, n, alphabet, (StringRole.TEXT,))
        st.update(u)
        apply_to_mirror(mirror, u)
    fresh = CanonicalBank(
        mirror[StringRole.PATTERN], mirror[StringRole.TEXT],
        st.encoder, st.params, st.bank.repetitions, seed=8,
    )
    for k in range(st.bank.levels):
        assert st.bank.text_sketches[k].dtype == fresh.text_sketches[k].dtype
        assert np.array_equal(st.bank.text_sketches[k], fresh.text_sketches[k])
        assert np.array_equal(st.bank.pattern_sketches[k], fresh.pattern_sketches[k])
