import numpy as np
import pytest

from src.core.data_models import (
    Alphabet,
    AlphabetKind,
    DynamicString,
    StringRole,
    Update,
    UpdateLog,
    apply_update,
    window,
)
from src.core.exceptions import (
    AlphabetError,
    InvalidSymbolError,
    LogCapacityError,
    PositionOutOfRangeError,
    WindowOutOfRangeError,
)


def test_apply_update_returns_displaced_symbol():
    s = DynamicString.from_text("abc", Alphabet.ternary())
    u = apply_update(s, 2, 0)
    assert u.old_symbol == 1
    assert u.new_symbol == 0
    assert s.symbols.tolist() == [0, 0, 2]
    assert s.version == 1


def test_apply_update_errors_are_distinct():
    s = DynamicString.from_text("abc", Alphabet.ternary())
    with pytest.raises(PositionOutOfRangeError):
        apply_update(s, 5, 0)
    with pytest.raises(InvalidSymbolError):
        apply_update(s, 1, 7)
    assert s.version == 0


def test_window_bounds():
    t = DynamicString([0, 1, 1, 0, 1], Alphabet.binary())
    assert window(t, 2, 3).tolist() == [1, 1, 0]
    with pytest.raises(WindowOutOfRangeError):
        window(t, 4, 3)
    with pytest.raises(WindowOutOfRangeError):
        window(t, 0, 2)


def test_window_is_read_only():
    t = DynamicString([0, 1, 1], Alphabet.binary())
    view = window(t, 1, 2)
    with pytest.raises(ValueError):
        view[0] = 1


def test_wildcard_alphabet_shifts_letters():
    alphabet = Alphabet.binary(wildcard=True)
    s = DynamicString.from_text("a?b", alphabet)
    assert s.symbols.tolist() == [1, 0, 2]
    assert alphabet.min_symbol == 0
    assert alphabet.max_symbol == 2


def test_constructor_rejects_invalid_symbols():
    with pytest.raises(InvalidSymbolError):
        DynamicString([0, 2], Alphabet.binary())
    with pytest.raises(PositionOutOfRangeError):
        DynamicString([], Alphabet.binary())


@pytest.mark.parametrize("size,kind", [
    (2, AlphabetKind.BINARY),
    (3, AlphabetKind.TERNARY),
    (64, AlphabetKind.CONSTANT),
    (65, AlphabetKind.POLYNOMIAL),
])
def test_alphabet_for_size_picks_tier(size, kind):
    assert Alphabet.for_size(size).kind is kind


def test_alphabet_limits():
    with pytest.raises(AlphabetError):
        Alphabet(AlphabetKind.BINARY, 3)
    with pytest.raises(AlphabetError):
        Alphabet.constant(65)


def test_copy_and_slice_are_independent():
    s = DynamicString([0, 1, 0, 1], Alphabet.binary())
    clone = s.copy(StringRole.PATTERN)
    piece = s.slice(2, 2)
    s.apply_update(2, 0)
    assert clone.symbols.tolist() == [0, 1, 0, 1]
    assert clone.role is StringRole.PATTERN
    assert piece.symbols.tolist() == [1, 0]


def test_update_log_fold_keeps_first_old_and_last_new():
    log = UpdateLog(4)
    log.append(Update(StringRole.TEXT, 3, 1, 0))
    log.append(Update(StringRole.TEXT, 3, 2, 1))
    log.append(Update(StringRole.PATTERN, 1, 1, 0))
    assert log.fold(StringRole.TEXT) == {3: (0, 2)}
    assert log.fold(StringRole.PATTERN) == {1: (0, 1)}


def test_update_log_capacity_and_requests():
    log = UpdateLog(1)
    with pytest.raises(LogCapacityError):
        log.append(Update.text(1, 1))
    log.append(Update(StringRole.TEXT, 1, 1, 0))
    assert log.is_full
    with pytest.raises(LogCapacityError):
        log.append(Update(StringRole.TEXT, 2, 1, 0))
    with pytest.raises(LogCapacityError):
        UpdateLog(0)


def test_update_log_resize_keeps_entries():
    log = UpdateLog(2)
    log.append(Update(StringRole.TEXT, 1, 1, 0))
    log.append(Update(StringRole.TEXT, 2, 1, 0))
    log.resize(5)
    assert not log.is_full
    log.append(Update(StringRole.TEXT, 3, 1, 0))
    with pytest.raises(LogCapacityError):
        log.resize(2)
    log.resize(3)
    assert log.is_full and len(log) == 3


def test_update_log_replay_and_drop_prefix():
    log = UpdateLog(3)
    log.append(Update(StringRole.PATTERN, 1, 1, 0))
    log.append(Update(StringRole.TEXT, 2, 1, 0))
    p, t = log.replay(np.array([0, 0]), np.array([0, 0, 0]))
    assert p.tolist() == [1, 0]
    assert t.tolist() == [0, 1, 0]
    log.drop_prefix(1)
    assert len(log) == 1
    assert log.fold(StringRole.PATTERN) == {}
