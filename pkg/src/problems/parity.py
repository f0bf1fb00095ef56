"""
Binary Hamming distance modulo 2.

For binary strings HD(P, W) mod 2 = (weight(P) + weight(W)) mod 2, so the
structure only needs the pattern's parity and prefix parities of the text,
kept in a XOR binary indexed tree.
"""

from typing import Any, Dict

import numpy as np

from ..core.base_structure import DynamicStructure
from ..core.data_models import AlphabetKind, DynamicString, StringRole, Update
from ..core.exceptions import AlphabetError, WindowOutOfRangeError


def _lowbit(i: int) -> int:
    return i & -i


class ParityStructure(DynamicStructure):
    """HD mod 2 for binary pattern and text with O(log n) node touches per op"""

    def __init__(self, pattern: DynamicString, text: DynamicString):
        super().__init__("parity_hd")
        for s in (pattern, text):
            if s.alphabet.kind is not AlphabetKind.BINARY or s.alphabet.wildcard_enabled:
                raise AlphabetError(
                    f"Parity fast path needs binary strings, got {s.alphabet.describe()}"
                )
        self.pattern = pattern.copy(StringRole.PATTERN)
        self.text = text.copy(StringRole.TEXT)
        self.m = len(self.pattern)
        self.n = len(self.text)
        if self.m > self.n:
            raise WindowOutOfRangeError(
                f"Pattern length {self.m} exceeds text length {self.n}"
            )
        self.pattern_parity = int(self.pattern.symbols.sum()) & 1

        prefix = np.zeros(self.n + 1, dtype=np.int64)
        prefix[1:] = np.cumsum(self.text.symbols) & 1
        index = np.arange(1, self.n + 1, dtype=np.int64)
        self.tree = np.zeros(self.n + 1, dtype=np.int64)
        self.tree[1:] = prefix[1:] ^ prefix[index - (index & -index)]
        self.initial_build_work = self.n

        self.nodes_touched_last_op = 0
        self.longest_path_last_op = 0

    def prefix_parity(self, i: int) -> int:
        """(T[1] + ... + T[i]) mod 2"""
        parity = 0
        touched = 0
        while i > 0:
            parity ^= int(self.tree[i])
            i -= _lowbit(i)
            touched += 1
        self._record(touched, touched)
        return parity

    def window_parity(self, i: int, m: int) -> int:
        """Parity of T[i..i+m-1]; both prefix walks stop where they meet"""
        right, left = i + m - 1, i - 1
        parity = 0
        right_path = left_path = 0
        while right != left:
            if right > left:
                parity ^= int(self.tree[right])
                right -= _lowbit(right)
                right_path += 1
            else:
                parity ^= int(self.tree[left])
                left -= _lowbit(left)
                left_path += 1
        self._record(right_path + left_path, max(right_path, left_path))
        return parity

    def query(self, i: int) -> int:
        if not 1 <= i <= self.n - self.m + 1:
            raise WindowOutOfRangeError(
                f"Alignment {i} outside [1, {self.n - self.m + 1}]"
            )
        return self.pattern_parity ^ self.window_parity(i, self.m)

    def update(self, u: Update) -> None:
        if u.target is StringRole.PATTERN:
            applied = self.pattern.apply_update(u.position, u.new_symbol)
            self.pattern_parity ^= (applied.old_symbol ^ applied.new_symbol)
            self._record(0, 0)
            return
        applied = self.text.apply_update(u.position, u.new_symbol)
        if applied.old_symbol == applied.new_symbol:
            self._record(0, 0)
            return
        i = u.position
        touched = 0
        while i <= self.n:
            self.tree[i] ^= 1
            i += _lowbit(i)
            touched += 1
        self._record(touched, touched)

    def _record(self, touched: int, longest: int) -> None:
        self.nodes_touched_last_op = touched
        self.longest_path_last_op = longest
        self.work_units_last_op = touched

    def stats(self) -> Dict[str, Any]:
        stats = super().stats()
        stats.update({
            "nodes_touched_last_op": self.nodes_touched_last_op,
            "longest_path_last_op": self.longest_path_last_op,
        })
        return stats


def parity_hd_query(ps: ParityStructure, i: int, m: int) -> int:
    """HD(P, T[i..i+m-1]) mod 2"""
    if m != ps.m:
        raise WindowOutOfRangeError(f"Window length {m} differs from pattern length {ps.m}")
    return ps.query(i)
