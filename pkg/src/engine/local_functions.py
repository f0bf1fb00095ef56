"""
Local functions: constant-time pairwise scores g(a, b) whose sum over an
alignment gives f, each tied to the batch solver that computes f for every
alignment at once.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from ..convolution.batch_solvers import (
    BatchSolver,
    InnerProductSolver,
    LargeAlphabetHammingSolver,
    SmallAlphabetHammingSolver,
    WildcardMatchSolver,
)
from ..convolution.ntt import ConvolutionEngine
from ..core.data_models import Alphabet
from ..core.exceptions import SolverMismatchError


class LocalFunctionId(Enum):
    HD = "hd"
    IP = "ip"
    EM_WEIGHTED = "em_weighted"


def _hd(a: int, b: int) -> int:
    return 0 if a == b else 1


def _ip(a: int, b: int) -> int:
    return a * b


def _em_weighted(a: int, b: int) -> int:
    return a * b * (a - b) * (a - b)


@dataclass(frozen=True)
class LocalFunction:
    """A pairwise score plus the identifier that selects its batch solver"""
    id: LocalFunctionId
    eval: Callable[[int, int], int]

    def total(self, pattern: Sequence[int], window: Sequence[int]) -> int:
        """Sum of g over one alignment"""
        return sum(self.eval(int(a), int(b)) for a, b in zip(pattern, window))

    def solver_for(
        self, alphabet: Alphabet, engine: ConvolutionEngine = None
    ) -> BatchSolver:
        if self.id is LocalFunctionId.HD:
            if alphabet.wildcard_enabled:
                raise SolverMismatchError("Hamming distance does not accept wildcards")
            if alphabet.is_constant_tier:
                return SmallAlphabetHammingSolver(engine)
            return LargeAlphabetHammingSolver(engine)
        if self.id is LocalFunctionId.IP:
            if alphabet.wildcard_enabled:
                raise SolverMismatchError("Inner product does not accept wildcards")
            return InnerProductSolver(engine)
        if not alphabet.wildcard_enabled:
            raise SolverMismatchError("Weighted wildcard matching needs a wildcard-enabled alphabet")
        return WildcardMatchSolver(engine)


HAMMING = LocalFunction(LocalFunctionId.HD, _hd)
INNER_PRODUCT = LocalFunction(LocalFunctionId.IP, _ip)
WILDCARD_MATCH = LocalFunction(LocalFunctionId.EM_WEIGHTED, _em_weighted)

LOCAL_FUNCTIONS = {lf.id: lf for lf in (HAMMING, INNER_PRODUCT, WILDCARD_MATCH)}


def local_function(name: str) -> LocalFunction:
    """Look up a local function by its id value ('hd', 'ip', 'em_weighted')"""
    try:
        return LOCAL_FUNCTIONS[LocalFunctionId(name)]
    except ValueError as e:
        raise SolverMismatchError(f"Unknown local function {name!r}") from e
