"""
Two-dimensional range counting and emptiness through dynamic string queries.

With m = r^3 the text (length 2m) is blank except for the r positions
m-r+1..m, which hold the weights of the grid's r slots. The pattern is cut
into r^2 segments of length r; segment j marks the slots a query shape
includes. Aligning the text at m-r+1-j*r puts segment j exactly over the
weight slots, so one query answers one range.

- counting: pattern marks are 1/0 and the query is an inner product;
- emptiness: pattern marks are an ordinary symbol / wildcard and the query is
  exact matching, which succeeds iff every included slot is blank.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.constants import APPROX_IP_THRESHOLD
from ..core.data_models import Alphabet, DynamicString, StringRole, Update, UpdateModel
from ..core.exceptions import DimensionMismatchError, ReductionError, ShapeCapacityError
from .backends import (
    BackendFactory,
    CountingBackend,
    approx_ip_backend,
    dynem_backend,
    dynip_backend,
)
from .instances import GadgetResult, GridInstance
from .omv import EM_ONE, EM_ZERO

logger = logging.getLogger(__name__)

Shape = Tuple[int, ...]
GridOperation = Tuple  # ("update", slot, weight) or ("query", x, y)

COUNT = "count"
EMPTY_EM = "empty_em"
EMPTY_APPROX_IP = "empty_approx_ip"


class GridEncoder:
    """Keeps a dynamic pattern/text pair encoding one grid and its query shapes"""

    def __init__(
        self,
        grid: GridInstance,
        kind: str = COUNT,
        backend: Optional[BackendFactory] = None,
        epsilon: float = 0.25,
        seed: int = 0,
    ):
        self.grid = grid.copy()
        self.kind = kind
        self.r = grid.r
        self.m = self.r ** 3
        self.capacity = self.r ** 2
        self.shapes: Dict[Shape, int] = {}
        self.shapes_registered_late = 0

        # pattern marks: included slot -> _mark, excluded slot or free segment -> 0
        self._mark = EM_ZERO if kind == EMPTY_EM else 1
        if kind == EMPTY_EM:
            alphabet_p = alphabet_t = Alphabet.binary(wildcard=True)
            factory = backend or dynem_backend(UpdateModel.PATTERN_AND_TEXT)
        elif kind == COUNT:
            alphabet_p = Alphabet.binary()
            alphabet_t = Alphabet.for_size(max(grid.max_weight + 1, 2))
            factory = backend or dynip_backend(UpdateModel.PATTERN_AND_TEXT)
        elif kind == EMPTY_APPROX_IP:
            # emptiness only needs presence bits
            alphabet_p = alphabet_t = Alphabet.binary()
            factory = backend or approx_ip_backend(epsilon, seed, UpdateModel.PATTERN_AND_TEXT)
        else:
            raise ReductionError(f"Unknown grid encoding {kind!r}")

        self.pattern = np.zeros(self.m, dtype=np.int64)
        self.text = np.full(2 * self.m, self._text_symbol(0), dtype=np.int64)
        for slot, weight in enumerate(self.grid.weights, start=1):
            self.text[self.slot_position(slot) - 1] = self._text_symbol(weight)
        for x in range(1, self.r + 1):
            for y in range(1, self.r + 1):
                self._write_shape(self.grid.indicator(x, y))

        self.backend = CountingBackend(factory(
            DynamicString(self.pattern, alphabet_p, StringRole.PATTERN),
            DynamicString(self.text, alphabet_t, StringRole.TEXT),
        ))
        self.backend.check_dimensions(self.m, 2 * self.m)
        logger.debug(f"Grid r={self.r}: {len(self.shapes)} distinct shapes registered up front")

    def _text_symbol(self, weight: int) -> int:
        if self.kind == EMPTY_EM:
            return EM_ONE if weight else EM_ZERO
        if self.kind == EMPTY_APPROX_IP:
            return 1 if weight else 0
        return weight

    def slot_position(self, slot: int) -> int:
        """1-based text position holding the weight of 1-based slot"""
        return self.m - self.r + slot

    def _write_shape(self, shape: Shape) -> List[Tuple[int, int]]:
        """Store a shape in the next free segment; returns the (position, symbol) writes"""
        if shape in self.shapes:
            return []
        if len(self.shapes) >= self.capacity:
            raise ShapeCapacityError(
                f"All {self.capacity} pattern segments hold query shapes"
            )
        segment = len(self.shapes)
        self.shapes[shape] = segment
        writes = []
        for i, included in enumerate(shape):
            position = segment * self.r + i + 1
            symbol = self._mark if included else 0
            if self.pattern[position - 1] != symbol:
                self.pattern[position - 1] = symbol
                writes.append((position, symbol))
        return writes

    def register_shape(self, shape: Sequence[int]) -> int:
        """Add an arbitrary slot subset as a query shape; returns its segment"""
        shape = tuple(1 if s else 0 for s in shape)
        if len(shape) != self.r:
            raise DimensionMismatchError(f"A shape marks exactly {self.r} slots, got {len(shape)}")
        if shape not in self.shapes:
            for position, symbol in self._write_shape(shape):
                self.backend.update(Update.pattern(position, symbol))
            self.shapes_registered_late += 1
        return self.shapes[shape]

    def alignment(self, segment: int) -> int:
        """1-based alignment putting `segment` over the weight slots"""
        return self.m - self.r + 1 - segment * self.r

    def set_weight(self, slot: int, weight: int) -> None:
        self.grid.set_weight(slot, weight)
        self.backend.update(Update.text(self.slot_position(slot), self._text_symbol(weight)))

    def ask(self, shape: Sequence[int]) -> Union[int, bool]:
        """Answer one query shape: a count, or True when the range is empty"""
        segment = self.register_shape(shape)
        answer = self.backend.query(self.alignment(segment))
        if self.kind == COUNT:
            return int(answer)
        if self.kind == EMPTY_EM:
            return bool(answer)
        return not answer > APPROX_IP_THRESHOLD

    def dominance(self, x: int, y: int) -> Union[int, bool]:
        return self.ask(self.grid.indicator(x, y))


def _run_grid(
    name: str,
    kind: str,
    grid: GridInstance,
    operations: Sequence[GridOperation],
    backend: Optional[BackendFactory],
    **kwargs,
) -> GadgetResult:
    encoder = GridEncoder(grid, kind, backend, **kwargs)
    answers = []
    for op in operations:
        if op[0] == "update":
            encoder.set_weight(op[1], op[2])
        else:
            answers.append(encoder.dominance(op[1], op[2]))
    return GadgetResult(
        name,
        answers,
        encoder.backend.updates,
        encoder.backend.queries,
        {"shapes": len(encoder.shapes), "shapes_registered_late": encoder.shapes_registered_late},
    )


def range_count_via_dynip(
    grid: GridInstance,
    operations: Sequence[GridOperation],
    backend: Optional[BackendFactory] = None,
) -> GadgetResult:
    """Dominance sums under weight updates, one inner-product query each"""
    return _run_grid("range_count", COUNT, grid, operations, backend)


def range_empty_via_dynem(
    grid: GridInstance,
    operations: Sequence[GridOperation],
    backend: Optional[BackendFactory] = None,
) -> GadgetResult:
    """Dominance emptiness under weight updates, one wildcard-match query each"""
    return _run_grid("range_empty_em", EMPTY_EM, grid, operations, backend)


def range_empty_via_approx_dynip(
    grid: GridInstance,
    operations: Sequence[GridOperation],
    epsilon: float = 0.25,
    seed: int = 0,
    backend: Optional[BackendFactory] = None,
) -> GadgetResult:
    """Dominance emptiness from approximate inner products thresholded at 1/2"""
    return _run_grid(
        "range_empty_approx_ip", EMPTY_APPROX_IP, grid, operations, backend,
        epsilon=epsilon, seed=seed,
    )
