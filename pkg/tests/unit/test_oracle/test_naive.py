import pytest

from src.core.data_models import Alphabet, DynamicString
from src.core.exceptions import WindowOutOfRangeError
from src.oracle import (
    naive_cross_correlate,
    naive_dominance,
    naive_em,
    naive_hd,
    naive_ip,
    naive_omv,
    naive_table,
)
from src.reductions import GridInstance, OMvInstance


def test_alignment_functions():
    p, t = [1, 0, 2], [1, 1, 2, 0, 2]
    assert naive_table(naive_hd, p, t) == [1, 2, 1]
    assert naive_table(naive_ip, p, t) == [5, 1, 6]


def test_wildcard_matching():
    assert naive_em([1, 0, 2], [1, 2, 2], 1) == (True, 0, 0)
    match, mismatches, weighted = naive_em([2, 1], [1, 1], 1)
    assert (match, mismatches, weighted) == (False, 1, 2)


def test_accepts_dynamic_strings():
    alphabet = Alphabet.binary()
    assert naive_hd(DynamicString([1, 0], alphabet), DynamicString([0, 0, 1], alphabet), 2) == 2


def test_window_bounds():
    with pytest.raises(WindowOutOfRangeError):
        naive_hd([1, 1], [1, 1, 1], 3)
    with pytest.raises(WindowOutOfRangeError):
        naive_ip([], [1], 1)


def test_cross_correlation():
    assert naive_cross_correlate([1, 2, 3, 4], [1, -1]) == [-1, -1, -1]


def test_reduction_targets():
    inst = OMvInstance([[1, 0], [1, 1]], [[0, 1], [1, 0]])
    assert naive_omv(inst) == [[0, 1], [1, 1]]
    grid = GridInstance(2, [(1, 1), (2, 1)], [3, 4])
    assert naive_dominance(grid, 1, 2) == 3
    assert naive_dominance(grid, 2, 1) == 7
