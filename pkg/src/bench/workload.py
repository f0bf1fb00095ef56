"""
Workload specifications and the seeded operation streams they expand to.

Identical specs (seed included) expand to identical initial strings and
identical operation sequences.
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..core.constants import DEFAULT_ENGINE_MODE, DEFAULT_GRAIN_DIVISOR, WILDCARD
from ..core.data_models import Alphabet, DynamicString, StringRole, Update
from ..core.exceptions import WorkloadSpecError
from ..core.utils import make_rng, split_ratio

Problem = Literal["hd", "ip", "em", "hd_mod2", "ip_mod2", "approx_hd"]

PROBLEMS: Tuple[str, ...] = ("hd", "ip", "em", "hd_mod2", "ip_mod2", "approx_hd")

# Probability of a wildcard when drawing exact-matching strings
WILDCARD_RATE = 0.1

Operation = Tuple[str, Any]  # ("update", Update) or ("query", alignment)


class WorkloadSpec(BaseModel):
    """One benchmark configuration"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    problem: Problem
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    sigma: int = Field(default=2, ge=2)
    model: Literal["pattern", "text", "both"] = "both"
    count: int = Field(default=1000, ge=0)
    ratio: str = "1:1"
    seed: int = 0
    epsilon: Optional[float] = None
    mode: Literal["amortized", "deamortized"] = DEFAULT_ENGINE_MODE
    grain_divisor: int = Field(default=DEFAULT_GRAIN_DIVISOR, ge=1)
    num_maps: Optional[int] = Field(default=None, ge=1)

    @field_validator("ratio")
    @classmethod
    def _check_ratio(cls, value: str) -> str:
        try:
            updates, queries = split_ratio(value)
        except ValueError as e:
            raise ValueError(f"ratio must look like U:Q, got {value!r}") from e
        if updates < 0 or queries < 0 or updates + queries == 0:
            raise ValueError(f"ratio needs a positive total, got {value!r}")
        return value

    @field_validator("epsilon")
    @classmethod
    def _check_epsilon(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and not 0.0 < value < 1.0:
            raise ValueError(f"epsilon must lie in (0, 1), got {value}")
        return value

    @model_validator(mode="after")
    def _check_shape(self) -> "WorkloadSpec":
        if self.m > self.n:
            raise ValueError(f"m={self.m} exceeds n={self.n}")
        if self.problem == "approx_hd" and self.epsilon is None:
            raise ValueError("approx_hd needs epsilon")
        if self.problem == "hd_mod2" and self.sigma > 3:
            raise ValueError("hd_mod2 runs on binary or ternary strings")
        return self

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.for_size(self.sigma, wildcard=self.problem == "em")

    @property
    def update_roles(self) -> List[StringRole]:
        if self.model == "pattern":
            return [StringRole.PATTERN]
        if self.model == "text":
            return [StringRole.TEXT]
        return [StringRole.PATTERN, StringRole.TEXT]


def parse_workload(**fields: Any) -> WorkloadSpec:
    """Validate fields into a WorkloadSpec, reporting every failing field"""
    try:
        return WorkloadSpec(**fields)
    except ValidationError as e:
        field_errors: Dict[str, str] = {}
        for error in e.errors():
            key = ".".join(str(part) for part in error["loc"]) or "spec"
            field_errors[key] = error["msg"]
        summary = "; ".join(f"{k}: {v}" for k, v in field_errors.items())
        raise WorkloadSpecError(f"Invalid workload: {summary}", field_errors) from e


def _draw_symbols(rng: np.random.Generator, alphabet: Alphabet, length: int) -> np.ndarray:
    if alphabet.wildcard_enabled:
        symbols = rng.integers(1, alphabet.size + 1, size=length)
        symbols[rng.random(length) < WILDCARD_RATE] = WILDCARD
        return symbols.astype(np.int64)
    return rng.integers(0, alphabet.size, size=length).astype(np.int64)


def initial_strings(spec: WorkloadSpec) -> Tuple[DynamicString, DynamicString]:
    rng = make_rng(spec.seed, 40)
    alphabet = spec.alphabet
    pattern = DynamicString(_draw_symbols(rng, alphabet, spec.m), alphabet, StringRole.PATTERN)
    text = DynamicString(_draw_symbols(rng, alphabet, spec.n), alphabet, StringRole.TEXT)
    return pattern, text


def generate_operations(spec: WorkloadSpec) -> List[Operation]:
    """Seeded interleaving of updates and queries following spec.ratio"""
    rng = make_rng(spec.seed, 41)
    updates, queries = split_ratio(spec.ratio)
    update_share = updates / (updates + queries)
    roles = spec.update_roles
    alignments = spec.n - spec.m + 1
    operations: List[Operation] = []
    for _ in range(spec.count):
        if rng.random() < update_share:
            role = roles[int(rng.integers(0, len(roles)))]
            length = spec.m if role is StringRole.PATTERN else spec.n
            position = int(rng.integers(1, length + 1))
            symbol = int(_draw_symbols(rng, spec.alphabet, 1)[0])
            operations.append(("update", Update(role, position, symbol)))
        else:
            operations.append(("query", int(rng.integers(1, alignments + 1))))
    return operations
