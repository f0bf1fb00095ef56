"""
Public dynamic problems: DynHD, DynIP, DynEM and the binary parity fast path.
"""

from .blocked import (
    BlockedStructure,
    DynEM,
    DynHD,
    DynIP,
    block_count,
    dyn_mod_query,
    dyn_query,
    dyn_update,
)
from .parity import ParityStructure, parity_hd_query

__all__ = [
    "BlockedStructure",
    "DynEM",
    "DynHD",
    "DynIP",
    "ParityStructure",
    "block_count",
    "dyn_mod_query",
    "dyn_query",
    "dyn_update",
    "parity_hd_query",
]
