"""
Resumable rebuilds: a RebuildPlan executed a bounded number of work units at
a time, carrying the snapshots it was planned on.
"""

import logging
from typing import Optional

import numpy as np

from ..convolution.plans import AlignmentTable, RebuildPlan
from ..core.utils import ceil_div

logger = logging.getLogger(__name__)


def deamortized_budget(total_work: int, capacity: int) -> int:
    """Work units per update so a rebuild of `total_work` ends within `capacity` updates"""
    return max(1, ceil_div(total_work, max(1, capacity)))


class ResumableRebuild:
    """One in-flight rebuild of an alignment table"""

    def __init__(
        self,
        plan: RebuildPlan,
        pattern_snapshot: np.ndarray,
        text_snapshot: np.ndarray,
        budget_per_step: int,
        grain: int,
        log_start: int = 0,
    ):
        self.plan = plan
        self.pattern_snapshot = pattern_snapshot
        self.text_snapshot = text_snapshot
        self.budget_per_step = budget_per_step
        self.grain = grain
        self.log_start = log_start
        self.work_done = 0
        self.result: Optional[AlignmentTable] = None
        self._steps = plan.steps(grain)

    @property
    def total_work(self) -> int:
        return self.plan.total_work

    @property
    def is_complete(self) -> bool:
        return self.result is not None

    @property
    def cursor(self) -> int:
        """Index of the chunk currently being executed"""
        done = 0
        for index, chunk in enumerate(self.plan.chunks):
            done += chunk.work
            if self.work_done < done:
                return index
        return len(self.plan.chunks)

    def advance(self, budget: Optional[int] = None) -> int:
        """Run until at least `budget` units are spent or the plan ends; returns units spent.

        Passing budget=None runs the plan to completion.
        """
        if self.result is not None:
            return 0
        spent = 0
        # past the planned total only the final combine remains
        while budget is None or spent < budget or self.work_done + spent >= self.total_work:
            try:
                spent += next(self._steps)
            except StopIteration as done:
                self.result = done.value
                logger.debug(
                    f"{self.plan.solver} rebuild finished after {self.work_done + spent} work units"
                )
                break
        self.work_done += spent
        return spent

    def step(self) -> int:
        return self.advance(self.budget_per_step)
