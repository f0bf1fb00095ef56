"""
Approximate Hamming distance over large alphabets.

Every map of a MappingBank turns P and T into binary strings; one binary
structure per map answers HD on the mapped pair and the bank's normalized
average is returned. Two layers are available:

- exact: a binary DynHD per map, any update model (error from the maps only);
- sketch: a pattern-only or text-only sketch structure per map, so the error
  compounds to (1+eps)^2, reported as eps' = 2*eps + eps^2.
"""

from typing import List, Optional, Union

from ..core.constants import DEFAULT_APPROX_CONSTANTS, DEFAULT_ENGINE_MODE
from ..core.data_models import (
    Alphabet,
    DynamicString,
    EngineMode,
    StringRole,
    Update,
    UpdateModel,
)
from ..core.exceptions import SolverMismatchError, UnsupportedOperationError
from ..core.utils import make_rng
from ..problems.blocked import DynHD
from .base import ApproxHDStructure
from .canonical import TextSketchHD
from .mappings import MappingBank
from .pattern_sketch import PatternSketchHD

EXACT_LAYER = "exact"
SKETCH_LAYER = "sketch"


class PolyAlphabetHD(ApproxHDStructure):
    """Mapping bank composed with per-map binary structures"""

    def __init__(
        self,
        pattern: DynamicString,
        text: DynamicString,
        epsilon: float,
        seed: int,
        update_model: Union[UpdateModel, str] = UpdateModel.PATTERN_AND_TEXT,
        layer: str = EXACT_LAYER,
        num_maps: Optional[int] = None,
        mode: Union[EngineMode, str] = DEFAULT_ENGINE_MODE,
        c_map: float = DEFAULT_APPROX_CONSTANTS['c_map'],
        c_d: float = DEFAULT_APPROX_CONSTANTS['c_d'],
        c_s: float = DEFAULT_APPROX_CONSTANTS['c_s'],
        c_r: float = DEFAULT_APPROX_CONSTANTS['c_r'],
    ):
        super().__init__("approx_poly", pattern, text, update_model, seed, epsilon)
        for s in (pattern, text):
            if s.alphabet.wildcard_enabled:
                raise SolverMismatchError("Hamming distance does not accept wildcards")
        if layer not in (EXACT_LAYER, SKETCH_LAYER):
            raise UnsupportedOperationError(f"Unknown layer {layer!r}")
        if layer == SKETCH_LAYER and self.update_model is UpdateModel.PATTERN_AND_TEXT:
            raise UnsupportedOperationError(
                "Sketched composition supports pattern-only or text-only updates"
            )
        self.layer = layer
        binary_input = max(pattern.alphabet.size, text.alphabet.size) <= 2
        if binary_input:
            self.bank = MappingBank.identity_binary()
        else:
            self.bank = MappingBank.for_epsilon(epsilon, self.n, seed, c_map, num_maps)
        self.effective_epsilon = epsilon if layer == EXACT_LAYER else 2 * epsilon + epsilon ** 2

        binary = Alphabet.binary()
        self.structures: List = []
        for j in range(len(self.bank)):
            mapped_p = DynamicString(self.bank.apply(j, pattern.symbols), binary, StringRole.PATTERN)
            mapped_t = DynamicString(self.bank.apply(j, text.symbols), binary, StringRole.TEXT)
            if layer == EXACT_LAYER:
                structure = DynHD(mapped_p, mapped_t, self.update_model, mode)
            else:
                sub_seed = int(make_rng(seed, 3, j).integers(0, 2 ** 31))
                if self.update_model is UpdateModel.PATTERN_ONLY:
                    structure = PatternSketchHD(mapped_p, mapped_t, epsilon, sub_seed, c_d, c_s)
                else:
                    structure = TextSketchHD(mapped_p, mapped_t, epsilon, sub_seed, c_d, c_s, c_r)
            self.structures.append(structure)
        self.initial_build_work = sum(st.initial_build_work for st in self.structures)
        self.logger.debug(
            f"Built {len(self.structures)} {layer} structures, eps'={self.effective_epsilon:.3f}"
        )

    def update(self, u: Update) -> None:
        applied = self._apply(u)
        work = 0
        for j, structure in enumerate(self.structures):
            bit = self.bank.map_symbol(j, applied.new_symbol)
            structure.update(Update(applied.target, applied.position, bit))
            work += structure.work_units_last_op
        self.work_units_last_op = work

    def query(self, i: int) -> float:
        self._check_alignment(i)
        distances = [structure.query(i) for structure in self.structures]
        self.work_units_last_op = sum(st.work_units_last_op for st in self.structures)
        return self.bank.estimate(distances)


def approx_query_poly_alphabet(st: PolyAlphabetHD, i: int) -> float:
    return st.query(i)
