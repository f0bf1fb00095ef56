# src/core/data_models.py
"""
Core string types: alphabets, mutable fixed-length strings, point updates and
the update log shared by every dynamic structure.

Positions are 1-based in every public signature; storage is 0-based.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .constants import (
    BINARY_ALPHABET_SIZE,
    MAX_CONSTANT_ALPHABET,
    MAX_POLYNOMIAL_ALPHABET,
    TERNARY_ALPHABET_SIZE,
    WILDCARD,
)
from .exceptions import (
    AlphabetError,
    InvalidSymbolError,
    LogCapacityError,
    PositionOutOfRangeError,
    WindowOutOfRangeError,
)


class AlphabetKind(Enum):
    """Alphabet size tiers"""
    BINARY = "binary"
    TERNARY = "ternary"
    CONSTANT = "constant"
    POLYNOMIAL = "polynomial"


class StringRole(Enum):
    """Which string an update targets"""
    PATTERN = "pattern"
    TEXT = "text"


class UpdateModel(Enum):
    """Which strings a structure lets callers update"""
    PATTERN_ONLY = "pattern"
    TEXT_ONLY = "text"
    PATTERN_AND_TEXT = "both"

    def allows(self, role: StringRole) -> bool:
        if self is UpdateModel.PATTERN_AND_TEXT:
            return True
        if self is UpdateModel.PATTERN_ONLY:
            return role is StringRole.PATTERN
        return role is StringRole.TEXT


class EngineMode(Enum):
    """Rebuild strategy of the lazy engine"""
    AMORTIZED = "amortized"
    DEAMORTIZED = "deamortized"


SymbolArray = np.ndarray


@dataclass(frozen=True)
class Alphabet:
    """Symbol domain of a string.

    Without wildcards the symbols are 0..size-1. With wildcards the value 0 is
    reserved for the wildcard and the ordinary symbols are 1..size.
    """
    kind: AlphabetKind
    size: int
    wildcard_enabled: bool = False

    def __post_init__(self):
        if self.size < 1:
            raise AlphabetError(f"Alphabet size must be positive, got {self.size}")
        if self.kind is AlphabetKind.BINARY and self.size != BINARY_ALPHABET_SIZE:
            raise AlphabetError(f"Binary alphabet must have size 2, got {self.size}")
        if self.kind is AlphabetKind.TERNARY and self.size != TERNARY_ALPHABET_SIZE:
            raise AlphabetError(f"Ternary alphabet must have size 3, got {self.size}")
        if self.kind is AlphabetKind.CONSTANT and self.size > MAX_CONSTANT_ALPHABET:
            raise AlphabetError(
                f"Constant alphabet size {self.size} exceeds {MAX_CONSTANT_ALPHABET}"
            )
        if self.size > MAX_POLYNOMIAL_ALPHABET:
            raise AlphabetError(
                f"Alphabet size {self.size} exceeds {MAX_POLYNOMIAL_ALPHABET}"
            )

    @classmethod
    def binary(cls, wildcard: bool = False) -> "Alphabet":
        return cls(AlphabetKind.BINARY, BINARY_ALPHABET_SIZE, wildcard)

    @classmethod
    def ternary(cls, wildcard: bool = False) -> "Alphabet":
        return cls(AlphabetKind.TERNARY, TERNARY_ALPHABET_SIZE, wildcard)

    @classmethod
    def constant(cls, size: int, wildcard: bool = False) -> "Alphabet":
        return cls(AlphabetKind.CONSTANT, size, wildcard)

    @classmethod
    def polynomial(cls, size: int, wildcard: bool = False) -> "Alphabet":
        return cls(AlphabetKind.POLYNOMIAL, size, wildcard)

    @classmethod
    def for_size(cls, size: int, wildcard: bool = False) -> "Alphabet":
        """Smallest tier that holds `size` symbols"""
        if size == BINARY_ALPHABET_SIZE:
            return cls.binary(wildcard)
        if size == TERNARY_ALPHABET_SIZE:
            return cls.ternary(wildcard)
        if size <= MAX_CONSTANT_ALPHABET:
            return cls.constant(size, wildcard)
        return cls.polynomial(size, wildcard)

    @property
    def is_constant_tier(self) -> bool:
        return self.kind is not AlphabetKind.POLYNOMIAL

    @property
    def min_symbol(self) -> int:
        return WILDCARD if self.wildcard_enabled else 0

    @property
    def max_symbol(self) -> int:
        return self.size if self.wildcard_enabled else self.size - 1

    def is_valid(self, symbol: int) -> bool:
        return self.min_symbol <= int(symbol) <= self.max_symbol

    def valid_mask(self, symbols: np.ndarray) -> np.ndarray:
        return (symbols >= self.min_symbol) & (symbols <= self.max_symbol)

    def describe(self) -> str:
        suffix = "+?" if self.wildcard_enabled else ""
        return f"{self.kind.value}({self.size}){suffix}"


@dataclass(frozen=True)
class Update:
    """A single-character substitution.

    `old_symbol` is None on a request and is filled in by apply_update with the
    symbol that was displaced.
    """
    target: StringRole
    position: int
    new_symbol: int
    old_symbol: Optional[int] = None

    @classmethod
    def pattern(cls, position: int, new_symbol: int) -> "Update":
        return cls(StringRole.PATTERN, position, new_symbol)

    @classmethod
    def text(cls, position: int, new_symbol: int) -> "Update":
        return cls(StringRole.TEXT, position, new_symbol)

    def relocated(self, position: int) -> "Update":
        """Same substitution at another position (block-local addressing)"""
        return Update(self.target, position, self.new_symbol)


class DynamicString:
    """Fixed-length mutable sequence of symbols over a declared alphabet"""

    def __init__(
        self,
        symbols: Union[Sequence[int], np.ndarray],
        alphabet: Alphabet,
        role: StringRole = StringRole.TEXT,
    ):
        arr = np.array(symbols, dtype=np.int64).reshape(-1)
        if arr.size == 0:
            raise PositionOutOfRangeError("A dynamic string must have positive length")
        invalid = ~alphabet.valid_mask(arr)
        if invalid.any():
            first = int(np.flatnonzero(invalid)[0])
            raise InvalidSymbolError(
                f"Symbol {int(arr[first])} at position {first + 1} is not valid "
                f"for alphabet {alphabet.describe()}"
            )
        self._symbols = arr
        self.alphabet = alphabet
        self.role = role
        self.version = 0

    @classmethod
    def from_text(
        cls, text: str, alphabet: Alphabet, role: StringRole = StringRole.TEXT
    ) -> "DynamicString":
        """Parse digits, lowercase letters and '?' into symbol values.

        Digits map to their value, letters map to 'a' -> 0 (or 1 when wildcards
        are enabled) upwards, '?' maps to the wildcard.
        """
        offset = 1 if alphabet.wildcard_enabled else 0
        values: List[int] = []
        for ch in text:
            if ch == '?':
                values.append(WILDCARD)
            elif ch.isdigit():
                values.append(int(ch))
            elif 'a' <= ch <= 'z':
                values.append(ord(ch) - ord('a') + offset)
            else:
                raise InvalidSymbolError(f"Cannot parse character {ch!r}")
        return cls(values, alphabet, role)

    def __len__(self) -> int:
        return int(self._symbols.size)

    def __getitem__(self, position: int) -> int:
        self._check_position(position)
        return int(self._symbols[position - 1])

    def __repr__(self) -> str:
        return (
            f"DynamicString(role={self.role.value}, length={len(self)}, "
            f"alphabet={self.alphabet.describe()})"
        )

    @property
    def length(self) -> int:
        return len(self)

    @property
    def symbols(self) -> SymbolArray:
        """Read-only view; invalidated by the next mutation"""
        view = self._symbols.view()
        view.flags.writeable = False
        return view

    def snapshot(self) -> SymbolArray:
        return self._symbols.copy()

    def copy(self, role: Optional[StringRole] = None) -> "DynamicString":
        clone = DynamicString.__new__(DynamicString)
        clone._symbols = self._symbols.copy()
        clone.alphabet = self.alphabet
        clone.role = role or self.role
        clone.version = 0
        return clone

    def slice(self, start: int, length: int) -> "DynamicString":
        """Independent copy of `length` symbols starting at 1-based `start`"""
        view = self.window(start, length)
        return DynamicString(view, self.alphabet, self.role)

    def apply_update(self, position: int, new_symbol: int) -> Update:
        self._check_position(position)
        if not self.alphabet.is_valid(new_symbol):
            raise InvalidSymbolError(
                f"Symbol {new_symbol} is not valid for alphabet {self.alphabet.describe()}"
            )
        old = int(self._symbols[position - 1])
        self._symbols[position - 1] = int(new_symbol)
        self.version += 1
        return Update(self.role, position, int(new_symbol), old)

    def window(self, i: int, m: int) -> SymbolArray:
        n = len(self)
        if m < 1 or i < 1 or i + m - 1 > n:
            raise WindowOutOfRangeError(
                f"Window [{i}, {i + m - 1}] exceeds text bounds [1, {n}]"
            )
        view = self._symbols[i - 1:i - 1 + m]
        view.flags.writeable = False
        return view

    def _check_position(self, position: int) -> None:
        if not 1 <= position <= len(self):
            raise PositionOutOfRangeError(
                f"Position {position} outside [1, {len(self)}] for {self.role.value}"
            )


def apply_update(s: DynamicString, position: int, new_symbol: int) -> Update:
    """Substitute one symbol and return the Update recording the old one"""
    return s.apply_update(position, new_symbol)


def window(t: DynamicString, i: int, m: int) -> SymbolArray:
    """Read-only view of t[i..i+m-1]"""
    return t.window(i, m)


@dataclass
class UpdateLog:
    """Bounded, ordered list of applied updates since the last snapshot"""
    capacity: int
    entries: List[Update] = field(default_factory=list)

    def __post_init__(self):
        if self.capacity < 1:
            raise LogCapacityError(f"Log capacity must be positive, got {self.capacity}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_full(self) -> bool:
        return len(self.entries) >= self.capacity

    def append(self, update: Update) -> None:
        if update.old_symbol is None:
            raise LogCapacityError("Only applied updates (with old_symbol) can be logged")
        if self.is_full:
            raise LogCapacityError(
                f"Update log is full ({self.capacity} entries); rebuild required"
            )
        self.entries.append(update)

    def resize(self, capacity: int) -> None:
        if capacity < max(1, len(self.entries)):
            raise LogCapacityError(
                f"Cannot shrink the log to {capacity} while it holds {len(self.entries)} entries"
            )
        self.capacity = capacity

    def clear(self) -> None:
        self.entries.clear()

    def drop_prefix(self, count: int) -> None:
        """Forget the first `count` entries (now covered by a newer snapshot)"""
        del self.entries[:count]

    def fold(self, target: StringRole) -> Dict[int, Tuple[int, int]]:
        """Collapse updates per position: position -> (snapshot value, live value)"""
        folded: Dict[int, Tuple[int, int]] = {}
        for u in self.entries:
            if u.target is not target:
                continue
            if u.position in folded:
                folded[u.position] = (folded[u.position][0], u.new_symbol)
            else:
                folded[u.position] = (u.old_symbol, u.new_symbol)
        return folded

    def replay(
        self, pattern_snapshot: np.ndarray, text_snapshot: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray]:
        """Apply the logged updates, in order, to copies of the snapshots"""
        strings = {
            StringRole.PATTERN: np.array(pattern_snapshot, dtype=np.int64),
            StringRole.TEXT: np.array(text_snapshot, dtype=np.int64),
        }
        for u in self.entries:
            strings[u.target][u.position - 1] = u.new_symbol
        return strings[StringRole.PATTERN], strings[StringRole.TEXT]


def as_symbol_array(s: Union[DynamicString, Sequence[int], np.ndarray]) -> np.ndarray:
    """Plain int64 array for a DynamicString or any integer sequence"""
    if isinstance(s, DynamicString):
        return s.snapshot()
    return np.asarray(s, dtype=np.int64).reshape(-1)
