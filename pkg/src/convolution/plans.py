"""
Rebuild plans: a batch solve expressed as an ordered list of work chunks.

Each chunk knows its exact work in advance and runs as a generator that
yields work units, so a plan can be executed in one go or resumed step by
step by the lazy engine.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .ntt import ConvolutionEngine, WorkSteps, run_steps


@dataclass
class AlignmentTable:
    """f(P, T[i..i+m-1]) for every alignment i of one pair of snapshots"""
    values: np.ndarray
    solver: str
    work_units: int = 0
    produced_for: Tuple[int, int] = (0, 0)
    remapped: bool = False

    def __len__(self) -> int:
        return int(self.values.size)

    def __getitem__(self, i: int) -> int:
        """Value at 1-based alignment i"""
        return int(self.values[i - 1])

    def as_list(self) -> List[int]:
        return [int(v) for v in self.values]


class WorkChunk(ABC):
    """One resumable piece of a batch solve"""

    work: int = 0
    label: str = ""

    @abstractmethod
    def steps(self, grain: Optional[int]) -> WorkSteps:
        """Yield work units (each yield at most `grain`) and return a contribution"""


class CorrelationChunk(WorkChunk):
    """Correlation of text**text_power against pattern**pattern_power"""

    def __init__(
        self,
        engine: ConvolutionEngine,
        text: np.ndarray,
        pattern: np.ndarray,
        text_power: int = 1,
        pattern_power: int = 1,
        label: str = "correlation",
    ):
        self.engine = engine
        self.text = text
        self.pattern = pattern
        self.text_power = text_power
        self.pattern_power = pattern_power
        self.label = label
        bound = engine.coefficient_bound(text, pattern, text_power, pattern_power)
        signed = bool((text < 0).any() or (pattern < 0).any())
        self.moduli = engine.moduli_needed(bound, signed)
        self.work = engine.correlation_work(text.size, pattern.size, self.moduli)

    def steps(self, grain: Optional[int]) -> WorkSteps:
        return (yield from self.engine.correlate_steps(
            self.text, self.pattern, self.text_power, self.pattern_power, grain
        ))


class IndicatorChunk(WorkChunk):
    """Match counts of one letter: correlation of its text and pattern indicators.

    The 0/1 indicator arrays are built when the chunk starts running, so a
    plan holds references to the two strings instead of one array pair per
    letter, and starting a rebuild costs O(n) regardless of the alphabet.
    """

    def __init__(
        self,
        engine: ConvolutionEngine,
        text: np.ndarray,
        pattern: np.ndarray,
        letter: int,
        label: str = "",
    ):
        self.engine = engine
        self.text = text
        self.pattern = pattern
        self.letter = letter
        self.label = label or f"letter {letter}"
        # an indicator correlation never exceeds the pattern length
        self.moduli = engine.moduli_needed(int(pattern.size))
        self.work = engine.correlation_work(text.size, pattern.size, self.moduli)

    def steps(self, grain: Optional[int]) -> WorkSteps:
        text = (self.text == self.letter).astype(np.int64)
        pattern = (self.pattern == self.letter).astype(np.int64)
        return (yield from self.engine.correlate_steps(text, pattern, 1, 1, grain))


class LightPairsChunk(WorkChunk):
    """Match counts from walking occurrence lists of light letters.

    For every light letter, each (pattern occurrence j, text occurrence k)
    pair adds one match to alignment k - j.
    """

    def __init__(
        self,
        occurrences: Sequence[Tuple[np.ndarray, np.ndarray]],
        out_len: int,
        label: str = "light letters",
    ):
        self.occurrences = list(occurrences)
        self.out_len = out_len
        self.label = label
        self.work = sum(int(pp.size) * int(tp.size) for pp, tp in self.occurrences)

    def steps(self, grain: Optional[int]) -> WorkSteps:
        counts = np.zeros(self.out_len, dtype=np.int64)
        for pp, tp in self.occurrences:
            limit = grain or max(1, pp.size * tp.size)
            p_step = max(1, min(pp.size, limit))
            for p_lo in range(0, pp.size, p_step):
                p_slice = pp[p_lo:p_lo + p_step]
                t_step = max(1, limit // p_slice.size)
                for t_lo in range(0, tp.size, t_step):
                    t_slice = tp[t_lo:t_lo + t_step]
                    starts = (t_slice[None, :] - p_slice[:, None]).ravel()
                    starts = starts[(starts >= 0) & (starts < self.out_len)]
                    counts += np.bincount(starts, minlength=self.out_len)
                    yield int(p_slice.size * t_slice.size)
        return counts


@dataclass
class RebuildPlan:
    """Ordered chunks plus the rule that combines their contributions"""
    solver: str
    chunks: List[WorkChunk]
    combine: Callable[[List[np.ndarray]], np.ndarray]
    produced_for: Tuple[int, int] = (0, 0)
    remapped: bool = False

    @property
    def total_work(self) -> int:
        return sum(chunk.work for chunk in self.chunks)

    def finish(self, contributions: List[np.ndarray]) -> AlignmentTable:
        return AlignmentTable(
            values=self.combine(contributions),
            solver=self.solver,
            work_units=self.total_work,
            produced_for=self.produced_for,
            remapped=self.remapped,
        )

    def steps(self, grain: Optional[int] = None) -> WorkSteps:
        contributions = []
        for chunk in self.chunks:
            contributions.append((yield from chunk.steps(grain)))
        return self.finish(contributions)

    def execute(self) -> AlignmentTable:
        table, _ = run_steps(self.steps())
        return table
