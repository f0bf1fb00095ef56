"""
Batch Solvers

Compute f(P, T[i..i+m-1]) for every alignment i in one pass:

- Hamming distance over constant-size alphabets: one indicator correlation
  per letter of P (binary uses the literal two-pass form, ones then zeros).
- Hamming distance over polynomial alphabets: heavy letters by correlation,
  light letters by walking occurrence lists (heavy/light split).
- Inner product: a single correlation.
- Exact matching with wildcards: the weighted score sum p*t*(p-t)^2 as
  three correlations, zero exactly at the wildcard matches.

Every solver first builds a RebuildPlan so the lazy engine can resume it in
bounded steps; solve() simply executes the plan.
"""

import logging
import math
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple, Union

import numpy as np

from ..core.constants import MAX_CONSTANT_ALPHABET
from ..core.data_models import Alphabet, DynamicString, as_symbol_array
from ..core.exceptions import (
    AlphabetTooLargeError,
    SolverMismatchError,
    WindowOutOfRangeError,
)
from .ntt import ConvolutionEngine, default_engine
from .plans import (
    AlignmentTable,
    CorrelationChunk,
    IndicatorChunk,
    LightPairsChunk,
    RebuildPlan,
)

logger = logging.getLogger(__name__)

StringInput = Union[DynamicString, np.ndarray, List[int]]


def _alphabet_of(s: StringInput) -> Optional[Alphabet]:
    return s.alphabet if isinstance(s, DynamicString) else None


def _version_of(s: StringInput) -> int:
    return s.version if isinstance(s, DynamicString) else 0


def heavy_threshold(n: int) -> int:
    """ceil(sqrt(n / log2 n)); letters at or above it are heavy"""
    if n < 2:
        return 1
    return max(1, math.ceil(math.sqrt(n / math.log2(n))))


class BatchSolver(ABC):
    """Base class for all batch alignment solvers"""

    name: str = "batch"

    def __init__(self, engine: Optional[ConvolutionEngine] = None):
        self.engine = engine or default_engine()

    @abstractmethod
    def _chunks(self, pattern: np.ndarray, text: np.ndarray, plan: RebuildPlan) -> None:
        """Fill plan.chunks and plan.combine"""

    def check_alphabet(self, alphabet: Optional[Alphabet]) -> None:
        """Raise if this solver cannot handle the alphabet"""

    def plan(self, pattern: StringInput, text: StringInput) -> RebuildPlan:
        for alphabet in (_alphabet_of(pattern), _alphabet_of(text)):
            self.check_alphabet(alphabet)
        p = as_symbol_array(pattern)
        t = as_symbol_array(text)
        if p.size < 1 or p.size > t.size:
            raise WindowOutOfRangeError(
                f"Pattern length {p.size} must be between 1 and text length {t.size}"
            )
        plan = RebuildPlan(
            solver=self.name,
            chunks=[],
            combine=lambda parts: np.zeros(t.size - p.size + 1, dtype=np.int64),
            produced_for=(_version_of(pattern), _version_of(text)),
        )
        self._chunks(p, t, plan)
        return plan

    def solve(self, pattern: StringInput, text: StringInput) -> AlignmentTable:
        plan = self.plan(pattern, text)
        logger.debug(f"{self.name}: {len(plan.chunks)} chunks, {plan.total_work} work units")
        return plan.execute()


def _mismatches(m: int):
    def combine(parts: List[np.ndarray]) -> np.ndarray:
        matches = np.zeros_like(parts[0]) if parts else None
        for part in parts:
            matches = matches + part
        return m - matches
    return combine


class SmallAlphabetHammingSolver(BatchSolver):
    """Hamming distance for alphabets of at most 64 letters"""

    name = "hd_small_alphabet"

    def check_alphabet(self, alphabet: Optional[Alphabet]) -> None:
        if alphabet is None:
            return
        if alphabet.wildcard_enabled:
            raise SolverMismatchError("Hamming distance solvers do not accept wildcards")
        if not alphabet.is_constant_tier:
            raise AlphabetTooLargeError(
                f"Alphabet {alphabet.describe()} is too large; use the polynomial-alphabet solver"
            )

    def _chunks(self, pattern: np.ndarray, text: np.ndarray, plan: RebuildPlan) -> None:
        sigma = int(max(pattern.max(), text.max())) + 1
        if sigma > MAX_CONSTANT_ALPHABET:
            raise AlphabetTooLargeError(
                f"Symbols up to {sigma - 1} exceed the constant-alphabet solver"
            )
        m = pattern.size
        letters = [1, 0] if sigma <= 2 else [int(a) for a in np.unique(pattern)]
        plan.chunks = [
            IndicatorChunk(self.engine, text, pattern, a)
            for a in letters
        ]
        plan.combine = _mismatches(m)


class LargeAlphabetHammingSolver(BatchSolver):
    """Hamming distance for polynomial alphabets via the heavy/light split"""

    name = "hd_large_alphabet"

    def check_alphabet(self, alphabet: Optional[Alphabet]) -> None:
        if alphabet is not None and alphabet.wildcard_enabled:
            raise SolverMismatchError("Hamming distance solvers do not accept wildcards")

    def split_letters(self, pattern: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
        letters, counts = np.unique(pattern, return_counts=True)
        heavy = counts >= heavy_threshold(n)
        return letters[heavy], letters[~heavy]

    def _chunks(self, pattern: np.ndarray, text: np.ndarray, plan: RebuildPlan) -> None:
        m, n = pattern.size, text.size
        out_len = n - m + 1
        heavy, light = self.split_letters(pattern, n)
        chunks = [
            IndicatorChunk(self.engine, text, pattern, a, label=f"heavy {a}")
            for a in heavy.tolist()
        ]

        occurrences = []
        if light.size:
            p_order = np.argsort(pattern, kind="stable")
            t_order = np.argsort(text, kind="stable")
            p_sorted = pattern[p_order]
            t_sorted = text[t_order]
            p_lo = np.searchsorted(p_sorted, light, side="left")
            p_hi = np.searchsorted(p_sorted, light, side="right")
            t_lo = np.searchsorted(t_sorted, light, side="left")
            t_hi = np.searchsorted(t_sorted, light, side="right")
            for k in np.flatnonzero(t_hi > t_lo).tolist():
                occurrences.append(
                    (p_order[p_lo[k]:p_hi[k]], t_order[t_lo[k]:t_hi[k]])
                )
        chunks.append(LightPairsChunk(occurrences, out_len))

        plan.chunks = chunks
        plan.combine = _mismatches(m)


class InnerProductSolver(BatchSolver):
    """Inner product of P against every text window"""

    name = "ip"

    def check_alphabet(self, alphabet: Optional[Alphabet]) -> None:
        if alphabet is not None and alphabet.wildcard_enabled:
            raise SolverMismatchError("Inner product is defined on numeric strings only")

    def _chunks(self, pattern: np.ndarray, text: np.ndarray, plan: RebuildPlan) -> None:
        plan.chunks = [CorrelationChunk(self.engine, text, pattern, label="inner product")]
        plan.combine = lambda parts: parts[0]


class WildcardMatchSolver(BatchSolver):
    """Weighted mismatch score sum p*t*(p-t)^2 with wildcard 0"""

    name = "em_weighted"

    def check_alphabet(self, alphabet: Optional[Alphabet]) -> None:
        if alphabet is not None and not alphabet.wildcard_enabled:
            raise SolverMismatchError("Wildcard matching needs a wildcard-enabled alphabet")

    def rank_remap(self, pattern: np.ndarray, text: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Replace ordinary symbols by their rank among the live symbols"""
        live = np.unique(np.concatenate([pattern, text]))
        live = live[live != 0]
        ranks = np.searchsorted(live, pattern) + 1
        p = np.where(pattern == 0, 0, ranks)
        ranks = np.searchsorted(live, text) + 1
        t = np.where(text == 0, 0, ranks)
        return p.astype(np.int64), t.astype(np.int64)

    def _chunks(self, pattern: np.ndarray, text: np.ndarray, plan: RebuildPlan) -> None:
        largest = int(max(pattern.max(), text.max()))
        if largest ** 4 * pattern.size >= self.engine.capacity:
            logger.info(
                f"Symbol magnitude {largest} too large for exact weighted scores; remapping to ranks"
            )
            pattern, text = self.rank_remap(pattern, text)
            plan.remapped = True
        plan.chunks = [
            CorrelationChunk(self.engine, text, pattern, 1, 3, label="p^3 t"),
            CorrelationChunk(self.engine, text, pattern, 2, 2, label="p^2 t^2"),
            CorrelationChunk(self.engine, text, pattern, 3, 1, label="p t^3"),
        ]
        plan.combine = lambda parts: parts[0] - 2 * parts[1] + parts[2]


def batch_hd_small_alphabet(pattern: StringInput, text: StringInput) -> AlignmentTable:
    return SmallAlphabetHammingSolver().solve(pattern, text)


def batch_hd_large_alphabet(pattern: StringInput, text: StringInput) -> AlignmentTable:
    return LargeAlphabetHammingSolver().solve(pattern, text)


def batch_ip(pattern: StringInput, text: StringInput) -> AlignmentTable:
    return InnerProductSolver().solve(pattern, text)


def batch_em(pattern: StringInput, text: StringInput) -> AlignmentTable:
    return WildcardMatchSolver().solve(pattern, text)
