"""
Lazy rebuilding engine: stale alignment tables patched by logged updates.
"""

from .lazy_structure import LazyStructure, build, patch_query, update
from .local_functions import (
    HAMMING,
    INNER_PRODUCT,
    WILDCARD_MATCH,
    LocalFunction,
    LocalFunctionId,
    local_function,
)
from .rebuild import ResumableRebuild, deamortized_budget

__all__ = [
    "HAMMING",
    "INNER_PRODUCT",
    "WILDCARD_MATCH",
    "LazyStructure",
    "LocalFunction",
    "LocalFunctionId",
    "ResumableRebuild",
    "build",
    "deamortized_budget",
    "local_function",
    "patch_query",
    "update",
]
