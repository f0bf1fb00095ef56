# src/core/base_structure.py
from abc import ABC, abstractmethod
from typing import Any, Dict
import logging
import time

from .data_models import Update


class DynamicStructure(ABC):
    """Base class for all dynamic alignment structures.

    Owns the structure's logger and the work counters exposed to the
    benchmark harness.
    """

    def __init__(self, name: str):
        self.name = name
        self.logger = logging.getLogger(f"{__name__}.{name}")
        self.work_units_last_op = 0
        self.initial_build_work = 0
        self.rebuilds_total = 0

    @abstractmethod
    def update(self, u: Update) -> None:
        """Apply one substitution to the pattern or the text"""

    @abstractmethod
    def query(self, i: int) -> Any:
        """Answer for the alignment starting at 1-based text position i"""

    def _log_rebuild_start(self, info: str) -> float:
        self.logger.debug(f"Rebuild started: {info}")
        return time.perf_counter()

    def _log_rebuild_end(self, info: str, started: float) -> None:
        self.logger.debug(
            f"Rebuild completed: {info} (took {time.perf_counter() - started:.4f}s)"
        )

    def stats(self) -> Dict[str, Any]:
        """Counter snapshot for reporting"""
        return {
            "structure": self.name,
            "rebuilds_total": self.rebuilds_total,
            "work_units_last_op": self.work_units_last_op,
            "initial_build_work": self.initial_build_work,
        }
