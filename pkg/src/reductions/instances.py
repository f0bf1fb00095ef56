"""
Inputs and outputs of the reduction gadgets.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..core.exceptions import DimensionMismatchError, ReductionError
from ..core.utils import make_rng


@dataclass
class OMvInstance:
    """An r x r Boolean matrix and the r vectors to multiply it with, in order"""
    matrix: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.int64)
        self.vectors = np.asarray(self.vectors, dtype=np.int64)
        r = self.matrix.shape[0]
        if self.matrix.ndim != 2 or self.matrix.shape != (r, r):
            raise DimensionMismatchError(f"Matrix must be square, got shape {self.matrix.shape}")
        if self.vectors.ndim != 2 or self.vectors.shape[1] != r:
            raise DimensionMismatchError(
                f"Vectors must have length {r}, got shape {self.vectors.shape}"
            )
        if ((self.matrix != 0) & (self.matrix != 1)).any() or ((self.vectors != 0) & (self.vectors != 1)).any():
            raise ReductionError("OMv entries must be 0 or 1")

    @property
    def r(self) -> int:
        return int(self.matrix.shape[0])

    @classmethod
    def random(cls, r: int, seed: int, density: float = 0.5) -> "OMvInstance":
        rng = make_rng(seed, 10)
        matrix = (rng.random((r, r)) < density).astype(np.int64)
        vectors = (rng.random((r, r)) < density).astype(np.int64)
        return cls(matrix, vectors)

    @classmethod
    def identity(cls, r: int, vectors: Optional[np.ndarray] = None) -> "OMvInstance":
        if vectors is None:
            vectors = np.eye(r, dtype=np.int64)
        return cls(np.eye(r, dtype=np.int64), vectors)


@dataclass
class GridInstance:
    """r x r grid with r weight slots at fixed points; a zero weight means no point"""
    r: int
    points: List[Tuple[int, int]]
    weights: List[int]
    max_weight: int = 255

    def __post_init__(self):
        if self.r < 1:
            raise DimensionMismatchError(f"Grid side must be positive, got {self.r}")
        if len(self.points) != self.r or len(self.weights) != self.r:
            raise DimensionMismatchError(
                f"A grid of side {self.r} has exactly {self.r} weight slots"
            )
        for x, y in self.points:
            if not (1 <= x <= self.r and 1 <= y <= self.r):
                raise DimensionMismatchError(f"Point ({x}, {y}) outside the {self.r}x{self.r} grid")
        self.points = [(int(x), int(y)) for x, y in self.points]
        self.weights = [int(w) for w in self.weights]
        for w in self.weights:
            self._check_weight(w)

    def _check_weight(self, weight: int) -> None:
        if not 0 <= weight <= self.max_weight:
            raise ReductionError(f"Weight {weight} outside [0, {self.max_weight}]")

    def set_weight(self, slot: int, weight: int) -> None:
        """Set the weight of 1-based slot"""
        self._check_weight(weight)
        self.weights[slot - 1] = int(weight)

    def indicator(self, x: int, y: int) -> Tuple[int, ...]:
        """1 for every slot whose point is dominated by (x, y)"""
        return tuple(1 if a <= x and b <= y else 0 for a, b in self.points)

    def copy(self) -> "GridInstance":
        return GridInstance(self.r, list(self.points), list(self.weights), self.max_weight)

    @classmethod
    def random(cls, r: int, seed: int, max_weight: int = 255, fill: float = 0.5) -> "GridInstance":
        rng = make_rng(seed, 11)
        points = [tuple(int(c) for c in rng.integers(1, r + 1, size=2)) for _ in range(r)]
        weights = [
            int(rng.integers(1, max_weight + 1)) if rng.random() < fill else 0 for _ in range(r)
        ]
        return cls(r, points, weights, max_weight)

    @classmethod
    def empty(cls, r: int, seed: int = 0, max_weight: int = 255) -> "GridInstance":
        return cls.random(r, seed, max_weight, fill=0.0)


@dataclass
class GadgetResult:
    """Answers of one gadget run plus the backend operations it issued"""
    gadget: str
    answers: Any
    backend_updates: int = 0
    backend_queries: int = 0
    details: Dict[str, Any] = field(default_factory=dict)
