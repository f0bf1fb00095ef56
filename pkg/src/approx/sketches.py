"""
Sparse Johnson-Lindenstrauss sketches of strings.

A string segment is encoded as an integer vector (binary symbols as-is,
larger alphabets one-hot per position, so a mismatch costs 2 in squared
distance instead of 1) and multiplied by a sparse sign matrix with exactly s
non-zeros per column. Sketches keep the unscaled integer product M x; the
1/sqrt(s) factor is applied once when an estimate is read.

The matrix uses the block construction: the d rows are split into s groups
and every column has one signed entry in each group.
"""

from dataclasses import dataclass
import math

import numpy as np
import scipy.sparse

from ..core.constants import DEFAULT_APPROX_CONSTANTS
from ..core.data_models import Alphabet
from ..core.exceptions import AlphabetError, UnsupportedOperationError


@dataclass(frozen=True)
class SketchParams:
    """Sketch dimension d and column sparsity s for a target epsilon"""
    epsilon: float
    dimension: int
    sparsity: int

    @classmethod
    def for_epsilon(
        cls,
        epsilon: float,
        c_d: float = DEFAULT_APPROX_CONSTANTS['c_d'],
        c_s: float = DEFAULT_APPROX_CONSTANTS['c_s'],
    ) -> "SketchParams":
        if not 0 < epsilon < 1:
            raise UnsupportedOperationError(f"epsilon must lie in (0, 1), got {epsilon}")
        sparsity = max(1, math.ceil(c_s / epsilon))
        dimension = max(sparsity, math.ceil(c_d / epsilon ** 2))
        dimension = -(-dimension // sparsity) * sparsity
        return cls(epsilon, dimension, sparsity)


class SymbolEncoder:
    """Maps string segments to sketch input columns"""

    def __init__(self, alphabet: Alphabet):
        if alphabet.wildcard_enabled or not alphabet.is_constant_tier:
            raise AlphabetError(
                f"Sketching needs a binary or constant alphabet without wildcards, "
                f"got {alphabet.describe()}"
            )
        self.unary = alphabet.size > 2
        self.width_per_symbol = alphabet.size if self.unary else 1
        # each unary mismatch contributes 2 to the squared distance
        self.divisor = 2 if self.unary else 1

    def width(self, length: int) -> int:
        return length * self.width_per_symbol

    def segments_matrix(self, symbols: np.ndarray, starts: np.ndarray, length: int):
        """Sparse (width x len(starts)) matrix whose columns encode symbols[s:s+length]"""
        offsets = starts[:, None] + np.arange(length, dtype=np.int64)[None, :]
        values = symbols[offsets]
        local = np.broadcast_to(np.arange(length, dtype=np.int64), values.shape)
        if self.unary:
            rows = local * self.width_per_symbol + values
            data = np.ones(values.shape, dtype=np.int64)
        else:
            rows = local
            data = values.astype(np.int64)
        cols = np.broadcast_to(np.arange(starts.size, dtype=np.int64)[:, None], values.shape)
        return scipy.sparse.csc_matrix(
            (data.ravel(), (rows.ravel(), cols.ravel())),
            shape=(self.width(length), starts.size),
            dtype=np.int64,
        )


class SparseJL:
    """Sparse sign matrix M (d x width) with s entries per column"""

    def __init__(self, width: int, params: SketchParams, rng: np.random.Generator):
        self.width = width
        self.params = params
        s, d = params.sparsity, params.dimension
        rows_per_group = d // s
        offsets = (np.arange(s, dtype=np.int64) * rows_per_group)[:, None]
        self.rows = rng.integers(0, rows_per_group, size=(s, width)) + offsets
        self.signs = rng.choice(np.array([-1, 1], dtype=np.int64), size=(s, width))
        self.matrix = scipy.sparse.csc_matrix(
            (
                self.signs.T.ravel(),
                (self.rows.T.ravel(), np.repeat(np.arange(width, dtype=np.int64), s)),
            ),
            shape=(d, width),
            dtype=np.int64,
        )

    def sketch_segments(
        self, encoder: SymbolEncoder, symbols: np.ndarray, starts: np.ndarray, length: int
    ) -> np.ndarray:
        """Unscaled sketches M x of every segment symbols[s:s+length], one row each"""
        if starts.size == 0:
            return np.zeros((0, self.params.dimension), dtype=np.int64)
        encoded = encoder.segments_matrix(symbols, starts, length)
        return np.asarray((self.matrix @ encoded).T.todense(), dtype=np.int64)

    def apply_substitution(
        self, vector: np.ndarray, encoder: SymbolEncoder, local: int, old: int, new: int
    ) -> int:
        """Update one sketch in place for segment[local]: old -> new; returns entries touched"""
        if old == new:
            return 0
        if encoder.unary:
            col_old = local * encoder.width_per_symbol + old
            col_new = local * encoder.width_per_symbol + new
            np.add.at(vector, self.rows[:, col_old], -self.signs[:, col_old])
            np.add.at(vector, self.rows[:, col_new], self.signs[:, col_new])
            return 2 * self.params.sparsity
        np.add.at(vector, self.rows[:, local], self.signs[:, local] * (new - old))
        return self.params.sparsity

    def squared_distance(self, a: np.ndarray, b: np.ndarray) -> float:
        """||s^{-1/2} (a - b)||^2"""
        diff = a - b
        return float(np.dot(diff, diff)) / self.params.sparsity


@dataclass
class SketchBank:
    """Sketches of many segments of one string under a single matrix"""
    layout: SparseJL
    vectors: np.ndarray
    seed: int
    segment_length: int

    def __len__(self) -> int:
        return int(self.vectors.shape[0])
