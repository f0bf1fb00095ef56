"""
Alphabet reduction to binary.

Each map sends every symbol to one bit. A map chosen uniformly at random
keeps equal symbols equal and separates a fixed unequal pair with
probability 1/2, so twice the average binary Hamming distance over many maps
estimates the original distance. Maps are evaluated by a keyed 64-bit mixing
hash, which makes them total over any alphabet without storing tables.
"""

import math
from typing import Optional, Sequence

import numpy as np

from ..core.constants import DEFAULT_APPROX_CONSTANTS
from ..core.exceptions import ConfigurationError
from ..core.utils import make_rng

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_2 = np.uint64(0x94D049BB133111EB)


def _mix64(values: np.ndarray) -> np.ndarray:
    z = values + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX_1
    z = (z ^ (z >> np.uint64(27))) * _MIX_2
    return z ^ (z >> np.uint64(31))


class MappingBank:
    """k maps from the alphabet to {0, 1} plus the normalization of their average"""

    def __init__(self, num_maps: int, seed: int, normalization: float = 2.0):
        if num_maps < 1:
            raise ConfigurationError(f"num_maps must be positive, got {num_maps}")
        self.num_maps = num_maps
        self.seed = seed
        self.normalization = normalization
        self.identity = False
        keys = make_rng(seed, 2).integers(0, np.iinfo(np.int64).max, size=num_maps, dtype=np.int64)
        self.keys = keys.astype(np.uint64)

    @classmethod
    def for_epsilon(
        cls,
        epsilon: float,
        n: int,
        seed: int,
        c_map: float = DEFAULT_APPROX_CONSTANTS['c_map'],
        num_maps: Optional[int] = None,
    ) -> "MappingBank":
        """ceil(c_map / eps^2 * log2(n)^2) maps unless num_maps is given"""
        if num_maps is None:
            num_maps = max(1, math.ceil(c_map / epsilon ** 2 * math.log2(max(n, 2)) ** 2))
        return cls(num_maps, seed)

    @classmethod
    def identity_binary(cls) -> "MappingBank":
        """Single identity map for strings that are already binary"""
        bank = cls(1, 0, normalization=1.0)
        bank.identity = True
        return bank

    def __len__(self) -> int:
        return self.num_maps

    def apply(self, j: int, symbols) -> np.ndarray:
        """map_j applied to every symbol"""
        values = np.asarray(symbols, dtype=np.int64).reshape(-1)
        if self.identity:
            return values.copy()
        hashed = _mix64(values.astype(np.uint64) ^ self.keys[j])
        return (hashed >> np.uint64(63)).astype(np.int64)

    def map_symbol(self, j: int, symbol: int) -> int:
        return int(self.apply(j, [symbol])[0])

    def estimate(self, distances: Sequence[float]) -> float:
        """normalization * average of the per-map distances"""
        return self.normalization * float(np.mean(distances))
