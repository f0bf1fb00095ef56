"""
Alphabet lifts turning binary inner-product instances into Hamming distance
instances.

- IP to HD: pattern 1 -> 111, 0 -> 010; text 1 -> 111, 0 -> 100. Every
  position that does not contribute to the inner product costs exactly 2
  mismatches, so IP = m - HD / 2.
- IP mod 2 to ternary HD mod 2: pattern 1 -> 22, 0 -> 01; text 1 -> 11,
  0 -> 02. A (1, 1) pair costs 2 mismatches and every other pair costs 1, so
  IP = (m - HD) mod 2.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.data_models import Alphabet, DynamicString, StringRole, Update
from ..core.exceptions import ReductionError
from .backends import BackendFactory, CountingBackend, dynhd_backend
from .instances import GadgetResult


@dataclass(frozen=True)
class Lift:
    """Per-symbol gadget strings for pattern and text"""
    name: str
    pattern_map: Dict[int, Tuple[int, ...]]
    text_map: Dict[int, Tuple[int, ...]]

    @property
    def width(self) -> int:
        return len(self.pattern_map[0])

    def _table(self, role: StringRole) -> Dict[int, Tuple[int, ...]]:
        return self.pattern_map if role is StringRole.PATTERN else self.text_map

    def lift(self, symbols: Sequence[int], role: StringRole) -> np.ndarray:
        table = self._table(role)
        values = np.asarray(symbols, dtype=np.int64).reshape(-1)
        if ((values != 0) & (values != 1)).any():
            raise ReductionError("Lifts take binary strings")
        out: List[int] = []
        for value in values.tolist():
            out.extend(table[value])
        return np.array(out, dtype=np.int64)

    def lift_update(self, u: Update, old_symbol: int) -> List[Update]:
        """The at most `width` lifted substitutions realising one source substitution"""
        table = self._table(u.target)
        before = table[int(old_symbol)]
        after = table[int(u.new_symbol)]
        base = (u.position - 1) * self.width
        return [
            Update(u.target, base + k + 1, new)
            for k, (old, new) in enumerate(zip(before, after))
            if old != new
        ]


IP_TO_HD = Lift(
    "ip_to_hd",
    pattern_map={1: (1, 1, 1), 0: (0, 1, 0)},
    text_map={1: (1, 1, 1), 0: (1, 0, 0)},
)

IPMOD2_TO_TERNARY_HD = Lift(
    "ipmod2_to_ternary_hd",
    pattern_map={1: (2, 2), 0: (0, 1)},
    text_map={1: (1, 1), 0: (0, 2)},
)


def lift_ip_to_hd(P: Sequence[int], T: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    return IP_TO_HD.lift(P, StringRole.PATTERN), IP_TO_HD.lift(T, StringRole.TEXT)


def decode_hd(hd_value: int, m: int) -> int:
    """Inner product from the lifted Hamming distance (m is the source pattern length)"""
    if hd_value % 2:
        raise ReductionError(f"Lifted Hamming distance must be even, got {hd_value}")
    return m - hd_value // 2


def lift_ipmod2_to_hdmod2_ternary(P: Sequence[int], T: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    return (
        IPMOD2_TO_TERNARY_HD.lift(P, StringRole.PATTERN),
        IPMOD2_TO_TERNARY_HD.lift(T, StringRole.TEXT),
    )


def decode_hd_mod2(hd_value: int, m: int) -> int:
    """Inner product mod 2 from the lifted ternary Hamming distance"""
    return (m - hd_value) % 2


def _lifted_gadget(
    name: str,
    lift: Lift,
    P: Sequence[int],
    T: Sequence[int],
    operations: Sequence[Union[Update, int]],
    backend: Optional[BackendFactory],
    alphabet: Alphabet,
    modular: bool,
) -> GadgetResult:
    source = {
        StringRole.PATTERN: np.asarray(P, dtype=np.int64).copy(),
        StringRole.TEXT: np.asarray(T, dtype=np.int64).copy(),
    }
    m = source[StringRole.PATTERN].size
    factory = backend or dynhd_backend()
    counting = CountingBackend(factory(
        DynamicString(lift.lift(source[StringRole.PATTERN], StringRole.PATTERN), alphabet, StringRole.PATTERN),
        DynamicString(lift.lift(source[StringRole.TEXT], StringRole.TEXT), alphabet, StringRole.TEXT),
    ))
    counting.check_dimensions(lift.width * m, lift.width * source[StringRole.TEXT].size)

    answers = []
    for op in operations:
        if isinstance(op, Update):
            live = source[op.target]
            for lifted in lift.lift_update(op, int(live[op.position - 1])):
                counting.update(lifted)
            live[op.position - 1] = op.new_symbol
        else:
            lifted_i = lift.width * (op - 1) + 1
            if modular:
                answers.append(decode_hd_mod2(counting.mod_query(lifted_i, 2), m))
            else:
                answers.append(decode_hd(counting.query(lifted_i), m))
    return GadgetResult(name, answers, counting.updates, counting.queries)


def ip_via_lifted_dynhd(
    P: Sequence[int],
    T: Sequence[int],
    operations: Sequence[Union[Update, int]],
    backend: Optional[BackendFactory] = None,
) -> GadgetResult:
    """Inner products of a dynamic binary pair answered by DynHD on the lifted pair.

    `operations` mixes source Updates and 1-based query alignments.
    """
    return _lifted_gadget(
        "lift_ip_hd", IP_TO_HD, P, T, operations, backend, Alphabet.binary(), modular=False
    )


def ipmod2_via_lifted_ternary_dynhd(
    P: Sequence[int],
    T: Sequence[int],
    operations: Sequence[Union[Update, int]],
    backend: Optional[BackendFactory] = None,
) -> GadgetResult:
    """Inner products mod 2 answered by ternary DynHD mod 2 on the lifted pair"""
    return _lifted_gadget(
        "lift_ipmod2_hd_ternary", IPMOD2_TO_TERNARY_HD, P, T, operations, backend,
        Alphabet.ternary(), modular=True,
    )
