"""
Backends the gadgets drive: factories for the dynamic structures, an
approximate inner-product adapter and an operation-counting wrapper.
"""

from typing import Callable, Union

import numpy as np

from ..core.base_structure import DynamicStructure
from ..core.constants import DEFAULT_ENGINE_MODE
from ..core.data_models import DynamicString, EngineMode, Update, UpdateModel
from ..core.exceptions import DimensionMismatchError
from ..core.utils import make_rng
from ..problems.blocked import DynEM, DynHD, DynIP

BackendFactory = Callable[[DynamicString, DynamicString], DynamicStructure]


class CountingBackend:
    """Forwards to a structure and counts the operations issued against it"""

    def __init__(self, structure: DynamicStructure):
        self.structure = structure
        self.updates = 0
        self.queries = 0

    @property
    def m(self) -> int:
        return self.structure.m

    @property
    def n(self) -> int:
        return self.structure.n

    def update(self, u: Update) -> None:
        self.updates += 1
        self.structure.update(u)

    def query(self, i: int):
        self.queries += 1
        return self.structure.query(i)

    def mod_query(self, i: int, c: int) -> int:
        self.queries += 1
        return self.structure.mod_query(i, c)

    def check_dimensions(self, m: int, n: int) -> None:
        if self.m != m or self.n != n:
            raise DimensionMismatchError(
                f"Backend holds m={self.m}, n={self.n}; the gadget needs m={m}, n={n}"
            )


class PerturbedIPBackend(DynamicStructure):
    """(1+eps)-approximate inner products: exact answers scaled by a seeded factor in [1-eps, 1+eps]

    Zero stays zero, so zero-preservation holds by construction.
    """

    def __init__(self, inner: DynIP, epsilon: float, seed: int):
        super().__init__(f"perturbed_ip_{epsilon}")
        self.inner = inner
        self.epsilon = epsilon
        self.rng = make_rng(seed, 20)
        self.m = inner.m
        self.n = inner.n

    def update(self, u: Update) -> None:
        self.inner.update(u)
        self.work_units_last_op = self.inner.work_units_last_op

    def query(self, i: int) -> float:
        exact = self.inner.query(i)
        self.work_units_last_op = self.inner.work_units_last_op
        factor = 1.0 + self.epsilon * (2.0 * float(self.rng.random()) - 1.0)
        return float(exact) * factor


def _mode(mode: Union[EngineMode, str]) -> EngineMode:
    return EngineMode(mode)


def dynem_backend(
    update_model: Union[UpdateModel, str] = UpdateModel.PATTERN_ONLY,
    mode: Union[EngineMode, str] = DEFAULT_ENGINE_MODE,
) -> BackendFactory:
    return lambda p, t: DynEM(p, t, update_model, _mode(mode))


def dynip_backend(
    update_model: Union[UpdateModel, str] = UpdateModel.PATTERN_ONLY,
    mode: Union[EngineMode, str] = DEFAULT_ENGINE_MODE,
) -> BackendFactory:
    return lambda p, t: DynIP(p, t, update_model, _mode(mode))


def dynhd_backend(
    update_model: Union[UpdateModel, str] = UpdateModel.PATTERN_AND_TEXT,
    mode: Union[EngineMode, str] = DEFAULT_ENGINE_MODE,
) -> BackendFactory:
    return lambda p, t: DynHD(p, t, update_model, _mode(mode))


def approx_ip_backend(
    epsilon: float,
    seed: int,
    update_model: Union[UpdateModel, str] = UpdateModel.PATTERN_ONLY,
    mode: Union[EngineMode, str] = DEFAULT_ENGINE_MODE,
) -> BackendFactory:
    return lambda p, t: PerturbedIPBackend(DynIP(p, t, update_model, _mode(mode)), epsilon, seed)


def set_segment(
    backend: CountingBackend,
    live: np.ndarray,
    start: int,
    values: np.ndarray,
    make_update: Callable[[int, int], Update],
) -> int:
    """Write values at 1-based start, issuing one backend update per changed symbol"""
    issued = 0
    for offset, value in enumerate(values.tolist()):
        position = start + offset
        if live[position - 1] != value:
            backend.update(make_update(position, int(value)))
            live[position - 1] = value
            issued += 1
    return issued
