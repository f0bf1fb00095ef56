"""
Approximate Hamming distance when only the text changes.

The text is covered, at every level k, by aligned blocks of length 2^k
(canonical blocks). Each block is sketched r times with independent
matrices, and the same r matrices sketch every length-2^k substring of the
pattern. A window splits into at most 2 per level of canonical blocks; each
block is compared against the pattern piece it is aligned with, using the
median of the r estimates, and the block estimates are summed.
"""

import math
from typing import List, Tuple

import numpy as np

from ..core.constants import DEFAULT_APPROX_CONSTANTS
from ..core.data_models import DynamicString, Update, UpdateModel
from ..core.exceptions import InvariantBreachError
from ..core.utils import make_rng
from .base import ApproxHDStructure
from .sketches import SketchParams, SparseJL, SymbolEncoder


def repetitions_for(m: int, c_r: float = DEFAULT_APPROX_CONSTANTS['c_r']) -> int:
    """ceil(c_r * log2 log2 m), at least 1"""
    if m < 4:
        return 1
    return max(1, math.ceil(c_r * math.log2(math.log2(m))))


def decompose_window(start: int, length: int, top_level: int) -> List[Tuple[int, int]]:
    """Split 0-based [start, start + length) into aligned dyadic blocks (level, position)"""
    pieces = []
    pos, end = start, start + length
    while pos < end:
        k = top_level
        while k > 0 and (pos % (1 << k) or pos + (1 << k) > end):
            k -= 1
        pieces.append((k, pos))
        pos += 1 << k
    covered = sum(1 << k for k, _ in pieces)
    if covered != length or len(pieces) > 2 * (top_level + 1):
        raise InvariantBreachError(
            f"Window [{start}, {end}) decomposed into {len(pieces)} pieces covering {covered}"
        )
    return pieces


class CanonicalBank:
    """r sketches of every canonical text block and every pattern piece, per level"""

    def __init__(
        self,
        pattern: np.ndarray,
        text: np.ndarray,
        encoder: SymbolEncoder,
        params: SketchParams,
        repetitions: int,
        seed: int,
    ):
        self.encoder = encoder
        self.params = params
        self.repetitions = repetitions
        self.seed = seed
        self.m = pattern.size
        self.n = text.size
        self.top_level = self.m.bit_length() - 1
        self.layouts: List[List[SparseJL]] = []
        self.text_sketches: List[np.ndarray] = []
        self.pattern_sketches: List[np.ndarray] = []
        for k in range(self.top_level + 1):
            size = 1 << k
            block_starts = np.arange(self.n // size, dtype=np.int64) * size
            piece_starts = np.arange(self.m - size + 1, dtype=np.int64)
            layouts = [
                SparseJL(encoder.width(size), params, make_rng(seed, 1, k, t))
                for t in range(repetitions)
            ]
            self.layouts.append(layouts)
            self.text_sketches.append(np.stack([
                layout.sketch_segments(encoder, text, block_starts, size) for layout in layouts
            ]))
            self.pattern_sketches.append(np.stack([
                layout.sketch_segments(encoder, pattern, piece_starts, size) for layout in layouts
            ]))

    @property
    def levels(self) -> int:
        return self.top_level + 1

    def block_estimate(self, k: int, text_pos: int, pattern_pos: int) -> float:
        """Median over repetitions for one canonical block against one pattern piece"""
        block = text_pos >> k
        estimates = [
            self.layouts[k][t].squared_distance(
                self.text_sketches[k][t, block], self.pattern_sketches[k][t, pattern_pos]
            )
            for t in range(self.repetitions)
        ]
        return float(np.median(estimates))

    def window_estimate(self, start: int) -> Tuple[float, int]:
        """(summed estimate, number of blocks) for the window at 0-based start"""
        pieces = decompose_window(start, self.m, self.top_level)
        total = sum(self.block_estimate(k, pos, pos - start) for k, pos in pieces)
        return total / self.encoder.divisor, len(pieces)

    def substitute_text(self, position: int, old: int, new: int) -> int:
        """Refresh every sketch of every canonical block holding 0-based `position`"""
        touched = 0
        for k in range(self.levels):
            block = position >> k
            if block >= self.text_sketches[k].shape[1]:
                continue
            local = position - (block << k)
            for t in range(self.repetitions):
                touched += self.layouts[k][t].apply_substitution(
                    self.text_sketches[k][t, block], self.encoder, local, old, new
                )
        return touched


class TextSketchHD(ApproxHDStructure):
    """(1+eps)-approximate HD under text-only updates"""

    def __init__(
        self,
        pattern: DynamicString,
        text: DynamicString,
        epsilon: float,
        seed: int,
        c_d: float = DEFAULT_APPROX_CONSTANTS['c_d'],
        c_s: float = DEFAULT_APPROX_CONSTANTS['c_s'],
        c_r: float = DEFAULT_APPROX_CONSTANTS['c_r'],
    ):
        super().__init__("approx_text", pattern, text, UpdateModel.TEXT_ONLY, seed, epsilon)
        alphabet = max(pattern.alphabet, text.alphabet, key=lambda a: a.size)
        self.encoder = SymbolEncoder(alphabet)
        self.params = SketchParams.for_epsilon(epsilon, c_d, c_s)
        self.bank = CanonicalBank(
            pattern.snapshot(),
            text.snapshot(),
            self.encoder,
            self.params,
            repetitions_for(self.m, c_r),
            seed,
        )
        self.initial_build_work = self.bank.levels * self.bank.repetitions * (self.n + self.m * self.m)
        self.blocks_last_query = 0

    def update(self, u: Update) -> None:
        applied = self._apply(u)
        self.work_units_last_op = self.bank.substitute_text(
            applied.position - 1, applied.old_symbol, applied.new_symbol
        )

    def query(self, i: int) -> float:
        self._check_alignment(i)
        estimate, blocks = self.bank.window_estimate(i - 1)
        self.blocks_last_query = blocks
        self.work_units_last_op = blocks * self.bank.repetitions * self.params.dimension
        return estimate


def approx_query_text_updates(st: TextSketchHD, i: int) -> float:
    return st.query(i)
