"""
Blocked Dynamic Structures

Texts longer than 2m are cut into blocks of length 2m overlapping by m
positions (block b covers 0-based text positions [b*m, min(b*m + 2m, n))).
Every window lies entirely inside the block chosen by its start, a text
update touches at most two blocks and a pattern update touches all of them.
Each block is an independent LazyStructure with its own pattern copy.
"""

from typing import Any, Dict, List, Optional, Tuple, Union

from ..core.base_structure import DynamicStructure
from ..core.constants import DEFAULT_GRAIN_DIVISOR
from ..core.data_models import (
    DynamicString,
    EngineMode,
    StringRole,
    Update,
    UpdateModel,
)
from ..core.exceptions import (
    UnsupportedOperationError,
    UpdateModelViolationError,
    WindowOutOfRangeError,
)
from ..core.utils import ceil_div
from ..engine.lazy_structure import LazyStructure
from ..engine.local_functions import (
    HAMMING,
    INNER_PRODUCT,
    WILDCARD_MATCH,
    LocalFunction,
    LocalFunctionId,
)


def block_count(n: int, m: int) -> int:
    if n < 2 * m:
        return 1
    return ceil_div(n - 2 * m, m) + 1


class BlockedStructure(DynamicStructure):
    """A LazyStructure per overlapping text block"""

    lf: LocalFunction = HAMMING

    def __init__(
        self,
        pattern: DynamicString,
        text: DynamicString,
        update_model: Union[UpdateModel, str] = UpdateModel.PATTERN_AND_TEXT,
        mode: Union[EngineMode, str] = EngineMode.AMORTIZED,
        grain_divisor: int = DEFAULT_GRAIN_DIVISOR,
        lf: Optional[LocalFunction] = None,
    ):
        if lf is not None:
            self.lf = lf
        super().__init__(f"dyn_{self.lf.id.value}")
        self.update_model = UpdateModel(update_model)
        self.mode = EngineMode(mode)
        self.pattern = pattern.copy(StringRole.PATTERN)
        self.text = text.copy(StringRole.TEXT)
        self.m = len(self.pattern)
        self.n = len(self.text)
        if self.m > self.n:
            raise WindowOutOfRangeError(
                f"Pattern length {self.m} exceeds text length {self.n}"
            )

        self.blocks: List[LazyStructure] = []
        self.block_starts: List[int] = []
        for b in range(block_count(self.n, self.m)):
            start = b * self.m
            length = min(2 * self.m, self.n - start)
            self.blocks.append(LazyStructure(
                self.pattern,
                self.text.slice(start + 1, length),
                self.lf,
                self.mode,
                grain_divisor,
                name=f"{self.name}.block{b}",
            ))
            self.block_starts.append(start)
        self.blocks_touched_last_op = 0
        self.initial_build_work = sum(block.initial_build_work for block in self.blocks)
        self.logger.debug(
            f"Built {len(self.blocks)} blocks for n={self.n} m={self.m}, "
            f"{self.initial_build_work} work units"
        )

    @property
    def num_alignments(self) -> int:
        return self.n - self.m + 1

    def owner(self, i: int) -> int:
        """Block answering the window that starts at 1-based position i"""
        return min((i - 1) // self.m, len(self.blocks) - 1)

    def block_map(self, position: int) -> List[Tuple[int, int]]:
        """(block id, 1-based local offset) pairs holding text position `position`"""
        k = position - 1
        home = k // self.m
        found = []
        for b in (home - 1, home):
            if 0 <= b < len(self.blocks):
                start = self.block_starts[b]
                if start <= k < start + len(self.blocks[b].text):
                    found.append((b, k - start + 1))
        return found

    def update(self, u: Update) -> None:
        if not self.update_model.allows(u.target):
            raise UpdateModelViolationError(
                f"{u.target.value} updates are not allowed under the "
                f"{self.update_model.value} update model"
            )
        if u.target is StringRole.PATTERN:
            self.pattern.apply_update(u.position, u.new_symbol)
            targets = [(block, u) for block in self.blocks]
        else:
            self.text.apply_update(u.position, u.new_symbol)
            targets = [
                (self.blocks[b], u.relocated(local)) for b, local in self.block_map(u.position)
            ]
        work = 0
        for block, local_update in targets:
            block.update(local_update)
            work += block.work_units_last_op
        self.blocks_touched_last_op = len(targets)
        self.work_units_last_op = work
        self.rebuilds_total = sum(block.rebuilds_total for block in self.blocks)

    def score(self, i: int) -> int:
        """Exact f at alignment i, routed to the owning block"""
        if not 1 <= i <= self.num_alignments:
            raise WindowOutOfRangeError(
                f"Alignment {i} outside [1, {self.num_alignments}]"
            )
        b = self.owner(i)
        block = self.blocks[b]
        value = block.patch_query(i - self.block_starts[b])
        self.work_units_last_op = block.work_units_last_op
        self.blocks_touched_last_op = 1
        return value

    def query(self, i: int) -> Any:
        return self.score(i)

    def mod_query(self, i: int, c: int) -> int:
        if c < 2:
            raise UnsupportedOperationError(f"Modulus must be at least 2, got {c}")
        return self.score(i) % c

    def stats(self) -> Dict[str, Any]:
        stats = super().stats()
        stats.update({
            "blocks": len(self.blocks),
            "update_model": self.update_model.value,
            "mode": self.mode.value,
            "blocks_touched_last_op": self.blocks_touched_last_op,
            "log_len_max": max(block.log_len for block in self.blocks),
            "forced_completions": sum(block.forced_completions for block in self.blocks),
        })
        return stats


class DynHD(BlockedStructure):
    """Dynamic Hamming distance"""
    lf = HAMMING


class DynIP(BlockedStructure):
    """Dynamic inner product"""
    lf = INNER_PRODUCT


class DynEM(BlockedStructure):
    """Dynamic exact matching with wildcards; queries report match/no-match"""
    lf = WILDCARD_MATCH

    def query(self, i: int) -> bool:
        return self.score(i) == 0

    def mod_query(self, i: int, c: int) -> int:
        raise UnsupportedOperationError("Exact matching with wildcards has no modular reading")


def dyn_query(bs: BlockedStructure, i: int):
    return bs.query(i)


def dyn_update(bs: BlockedStructure, u: Update) -> None:
    bs.update(u)


def dyn_mod_query(bs: BlockedStructure, i: int, c: int) -> int:
    if bs.lf.id is LocalFunctionId.EM_WEIGHTED:
        raise UnsupportedOperationError("Exact matching with wildcards has no modular reading")
    return bs.mod_query(i, c)
