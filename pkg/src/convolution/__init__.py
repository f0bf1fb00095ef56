"""
Exact batch solvers built on number-theoretic convolution.
"""

from .batch_solvers import (
    BatchSolver,
    InnerProductSolver,
    LargeAlphabetHammingSolver,
    SmallAlphabetHammingSolver,
    WildcardMatchSolver,
    batch_em,
    batch_hd_large_alphabet,
    batch_hd_small_alphabet,
    batch_ip,
    heavy_threshold,
)
from .ntt import ConvolutionEngine, cross_correlate, default_engine, run_steps
from .plans import AlignmentTable, RebuildPlan, WorkChunk

__all__ = [
    "AlignmentTable",
    "BatchSolver",
    "ConvolutionEngine",
    "InnerProductSolver",
    "LargeAlphabetHammingSolver",
    "RebuildPlan",
    "SmallAlphabetHammingSolver",
    "WildcardMatchSolver",
    "WorkChunk",
    "batch_em",
    "batch_hd_large_alphabet",
    "batch_hd_small_alphabet",
    "batch_ip",
    "cross_correlate",
    "default_engine",
    "heavy_threshold",
    "run_steps",
]
