"""
Shared plumbing for the approximate Hamming distance structures: the update
model guard and detection of strings mutated behind the structure's back.
"""

from typing import Any, Dict, Union

from ..core.base_structure import DynamicStructure
from ..core.data_models import DynamicString, StringRole, Update, UpdateModel
from ..core.exceptions import UpdateModelViolationError, WindowOutOfRangeError


class ApproxHDStructure(DynamicStructure):
    """Base for structures that hold the caller's strings under a restricted update model"""

    def __init__(
        self,
        name: str,
        pattern: DynamicString,
        text: DynamicString,
        update_model: Union[UpdateModel, str],
        seed: int,
        epsilon: float,
    ):
        super().__init__(name)
        if len(pattern) > len(text):
            raise WindowOutOfRangeError(
                f"Pattern length {len(pattern)} exceeds text length {len(text)}"
            )
        self.pattern = pattern
        self.text = text
        self.update_model = UpdateModel(update_model)
        self.seed = seed
        self.epsilon = epsilon
        self.m = len(pattern)
        self.n = len(text)
        self._versions = (pattern.version, text.version)

    @property
    def num_alignments(self) -> int:
        return self.n - self.m + 1

    def _check_live(self) -> None:
        if self.pattern.version != self._versions[0]:
            raise UpdateModelViolationError("Pattern was mutated outside this structure")
        if self.text.version != self._versions[1]:
            raise UpdateModelViolationError("Text was mutated outside this structure")

    def _check_alignment(self, i: int) -> None:
        self._check_live()
        if not 1 <= i <= self.num_alignments:
            raise WindowOutOfRangeError(
                f"Alignment {i} outside [1, {self.num_alignments}]"
            )

    def _apply(self, u: Update) -> Update:
        """Validate against the update model and apply to the live string"""
        if not self.update_model.allows(u.target):
            raise UpdateModelViolationError(
                f"{u.target.value} updates are not allowed under the "
                f"{self.update_model.value} update model"
            )
        self._check_live()
        live = self.pattern if u.target is StringRole.PATTERN else self.text
        applied = live.apply_update(u.position, u.new_symbol)
        self._versions = (self.pattern.version, self.text.version)
        return Update(u.target, u.position, applied.new_symbol, applied.old_symbol)

    def stats(self) -> Dict[str, Any]:
        stats = super().stats()
        stats.update({
            "update_model": self.update_model.value,
            "epsilon": self.epsilon,
            "seed": self.seed,
        })
        return stats
