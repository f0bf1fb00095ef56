"""
Approximate Hamming distance when only the pattern changes.

The text is static, so every window sketch is computed once at build time.
A pattern substitution touches s entries of the pattern sketch and a query
is one squared distance between two d-dimensional vectors.
"""

import numpy as np

from ..core.constants import DEFAULT_APPROX_CONSTANTS
from ..core.data_models import DynamicString, Update, UpdateModel
from ..core.utils import make_rng
from .base import ApproxHDStructure
from .sketches import SketchBank, SketchParams, SparseJL, SymbolEncoder


class PatternSketchHD(ApproxHDStructure):
    """(1+eps)-approximate HD under pattern-only updates"""

    def __init__(
        self,
        pattern: DynamicString,
        text: DynamicString,
        epsilon: float,
        seed: int,
        c_d: float = DEFAULT_APPROX_CONSTANTS['c_d'],
        c_s: float = DEFAULT_APPROX_CONSTANTS['c_s'],
    ):
        super().__init__("approx_pattern", pattern, text, UpdateModel.PATTERN_ONLY, seed, epsilon)
        alphabet = max(pattern.alphabet, text.alphabet, key=lambda a: a.size)
        self.encoder = SymbolEncoder(alphabet)
        self.params = SketchParams.for_epsilon(epsilon, c_d, c_s)
        self.layout = SparseJL(self.encoder.width(self.m), self.params, make_rng(seed, 0))

        self.pattern_sketch = self.sketch_pattern()
        starts = np.arange(self.num_alignments, dtype=np.int64)
        self.windows = SketchBank(
            layout=self.layout,
            vectors=self.layout.sketch_segments(self.encoder, text.snapshot(), starts, self.m),
            seed=seed,
            segment_length=self.m,
        )
        self.initial_build_work = (self.num_alignments + 1) * self.m * self.params.sparsity
        self.logger.debug(
            f"Sketched {len(self.windows)} windows: d={self.params.dimension}, "
            f"s={self.params.sparsity}"
        )

    def sketch_pattern(self) -> np.ndarray:
        """From-scratch sketch of the live pattern"""
        starts = np.zeros(1, dtype=np.int64)
        return self.layout.sketch_segments(
            self.encoder, self.pattern.snapshot(), starts, self.m
        )[0]

    def update(self, u: Update) -> None:
        applied = self._apply(u)
        self.work_units_last_op = self.layout.apply_substitution(
            self.pattern_sketch,
            self.encoder,
            applied.position - 1,
            applied.old_symbol,
            applied.new_symbol,
        )

    def query(self, i: int) -> float:
        self._check_alignment(i)
        self.work_units_last_op = self.params.dimension
        distance = self.layout.squared_distance(self.pattern_sketch, self.windows.vectors[i - 1])
        return distance / self.encoder.divisor


def approx_query_pattern_updates(st: PatternSketchHD, i: int) -> float:
    return st.query(i)
