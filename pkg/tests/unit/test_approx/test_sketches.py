import numpy as np
import pytest

from src.approx import PatternSketchHD, SketchParams, SparseJL, SymbolEncoder, approx_query_pattern_updates
from src.core.data_models import Alphabet, DynamicString, StringRole, Update
from src.core.exceptions import (
    AlphabetError,
    UnsupportedOperationError,
    UpdateModelViolationError,
)
from src.core.utils import make_rng
from src.oracle.naive import naive_hd

from tests.strings import random_pair, random_symbols


def test_params_for_epsilon():
    params = SketchParams.for_epsilon(0.5)
    assert params.sparsity == 4
    assert params.dimension == 32
    assert SketchParams.for_epsilon(0.3).dimension % SketchParams.for_epsilon(0.3).sparsity == 0
    for bad in (0.0, 1.0, -0.2):
        with pytest.raises(UnsupportedOperationError):
            SketchParams.for_epsilon(bad)


def test_encoder_rejects_wildcards_and_large_alphabets():
    with pytest.raises(AlphabetError):
        SymbolEncoder(Alphabet.binary(wildcard=True))
    with pytest.raises(AlphabetError):
        SymbolEncoder(Alphabet.polynomial(100))
    assert SymbolEncoder(Alphabet.constant(5)).divisor == 2
    assert SymbolEncoder(Alphabet.binary()).divisor == 1


def test_every_column_has_sparsity_entries():
    params = SketchParams.for_epsilon(0.5)
    layout = SparseJL(20, params, make_rng(1))
    counts = np.diff(layout.matrix.indptr)
    assert counts.tolist() == [params.sparsity] * 20
    groups = layout.rows // (params.dimension // params.sparsity)
    assert (groups == np.arange(params.sparsity)[:, None]).all()


def test_single_mismatch_is_exact():
    params = SketchParams.for_epsilon(0.5)
    encoder = SymbolEncoder(Alphabet.binary())
    layout = SparseJL(encoder.width(6), params, make_rng(2))
    symbols = np.array([0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1], dtype=np.int64)
    a, b = layout.sketch_segments(encoder, symbols, np.array([0, 6]), 6)
    assert layout.squared_distance(a, b) == 1.0


@pytest.mark.parametrize("alphabet", [Alphabet.binary(), Alphabet.constant(6)])
def test_pattern_updates_keep_sketch_exact(rng, alphabet):
    pattern, text = random_pair(rng, 12, 40, alphabet)
    st = PatternSketchHD(pattern, text, epsilon=0.5, seed=7)
    for _ in range(50):
        position = int(rng.integers(1, 13))
        st.update(Update.pattern(position, int(random_symbols(rng, 1, alphabet)[0])))
    assert np.array_equal(st.pattern_sketch, st.sketch_pattern())


def test_zero_distance_reads_zero(rng):
    alphabet = Alphabet.ternary()
    text = DynamicString(random_symbols(rng, 30, alphabet), alphabet)
    pattern = text.slice(9, 8).copy(StringRole.PATTERN)
    st = PatternSketchHD(pattern, text, epsilon=0.25, seed=3)
    assert approx_query_pattern_updates(st, 9) == 0.0


def test_estimates_cover_true_distance(make_pair):
    pattern, text = make_pair(32, 96, Alphabet.constant(4))
    st = PatternSketchHD(pattern, text, epsilon=0.5, seed=11, c_d=64.0)
    for i in range(1, 66):
        truth = naive_hd(pattern, text, i)
        assert abs(st.query(i) - truth) <= 0.5 * truth


def test_update_model_and_external_mutation(make_pair):
    pattern, text = make_pair(4, 10)
    st = PatternSketchHD(pattern, text, epsilon=0.5, seed=0)
    with pytest.raises(UpdateModelViolationError):
        st.update(Update.text(1, 1))
    text.apply_update(1, 1 - text[1])
    with pytest.raises(UpdateModelViolationError):
        st.query(1)


def test_same_seed_same_sketches(make_pair):
    pattern, text = make_pair(8, 20)
    a = PatternSketchHD(pattern, text, epsilon=0.4, seed=5)
    b = PatternSketchHD(pattern, text, epsilon=0.4, seed=5)
    assert [a.query(i) for i in range(1, 14)] == [b.query(i) for i in range(1, 14)]
