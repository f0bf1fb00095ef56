"""
Core Package

Foundational components shared by every dynamic structure: string and update
types, the structure base class, constants, utilities and the exception
hierarchy.

Core Components:
- DynamicStructure: Abstract base class for all dynamic alignment structures
- DataModels: alphabets, dynamic strings, updates and the update log
- Constants: tunable defaults, error codes and CSV schemas
- Utils: configuration merging, integer helpers and seeded generators
- Exceptions: DynStringError and its subclasses

Author: Dynamic Strings Team
Version: 1.0.0
"""

import logging

from .base_structure import DynamicStructure
from .constants import (
    DEFAULT_APPROX_CONSTANTS,
    DEFAULT_SETTINGS,
    ERROR_CODES,
    WILDCARD,
)
from .data_models import (
    Alphabet,
    AlphabetKind,
    DynamicString,
    EngineMode,
    StringRole,
    Update,
    UpdateLog,
    UpdateModel,
    apply_update,
    as_symbol_array,
    window,
)
from .exceptions import (
    AlphabetError,
    AlphabetTooLargeError,
    CoefficientBoundError,
    ConfigurationError,
    ConvolutionError,
    DimensionMismatchError,
    DynStringError,
    InvalidSymbolError,
    InvariantBreachError,
    LogCapacityError,
    PositionOutOfRangeError,
    ReductionError,
    ShapeCapacityError,
    SolverMismatchError,
    UnsupportedOperationError,
    UpdateModelViolationError,
    WindowOutOfRangeError,
    WorkloadSpecError,
)
from .utils import ceil_div, ceil_log2, ceil_sqrt, make_rng, merge_configurations

__version__ = "1.0.0"
__author__ = "Dynamic Strings Team"

logger = logging.getLogger(__name__)

__all__ = [
    "Alphabet",
    "AlphabetError",
    "AlphabetKind",
    "AlphabetTooLargeError",
    "CoefficientBoundError",
    "ConfigurationError",
    "ConvolutionError",
    "DEFAULT_APPROX_CONSTANTS",
    "DEFAULT_SETTINGS",
    "DimensionMismatchError",
    "DynStringError",
    "DynamicString",
    "DynamicStructure",
    "ERROR_CODES",
    "EngineMode",
    "InvalidSymbolError",
    "InvariantBreachError",
    "LogCapacityError",
    "PositionOutOfRangeError",
    "ReductionError",
    "ShapeCapacityError",
    "SolverMismatchError",
    "StringRole",
    "UnsupportedOperationError",
    "Update",
    "UpdateLog",
    "UpdateModel",
    "UpdateModelViolationError",
    "WILDCARD",
    "WindowOutOfRangeError",
    "WorkloadSpecError",
    "apply_update",
    "as_symbol_array",
    "ceil_div",
    "ceil_log2",
    "ceil_sqrt",
    "make_rng",
    "merge_configurations",
    "window",
]
