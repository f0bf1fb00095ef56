"""
Lazy Alignment Structure

Keeps an alignment table computed on snapshots of P and T plus the log of
updates applied since. A query reads the stale table entry and corrects it
with g(live pair) - g(snapshot pair) for every cell of the window touched by
the log, so its cost is O(|log|).

Two rebuild strategies:
- amortized: when the log holds ceil(sqrt(W)) updates, snapshot the live
  strings, rebuild monolithically and clear the log.
- deamortized: every ceil(sqrt(W)/2) updates start a resumable rebuild on a
  fresh snapshot and advance it by a fixed budget per update; queries keep
  using the old table and the full log until the new table is swapped in.

W is the work of the most recent rebuild plan. The restart interval and the
log capacity are re-derived from it whenever a rebuild is planned, so a
pattern that gains letters (and with them correlations) lengthens the
interval instead of inflating the per-update budget.

work_units_last_op counts one unit per logged update, one per corrected cell
and the rebuild work advanced (transform butterflies and light pairs). The
O(n) snapshot copies, indicator construction and the final
O(sigma * (n - m)) combine are numpy passes kept outside the counter.
"""

from typing import Any, Dict, Optional, Union

from ..convolution.batch_solvers import BatchSolver
from ..convolution.plans import AlignmentTable
from ..core.base_structure import DynamicStructure
from ..core.constants import DEFAULT_GRAIN_DIVISOR
from ..core.data_models import (
    DynamicString,
    EngineMode,
    StringRole,
    Update,
    UpdateLog,
)
from ..core.exceptions import SolverMismatchError, WindowOutOfRangeError
from ..core.utils import ceil_div, ceil_sqrt
from .local_functions import LocalFunction
from .rebuild import ResumableRebuild, deamortized_budget


class LazyStructure(DynamicStructure):
    """Dynamic f(P, T[i..i+m-1]) for one pattern against one text"""

    def __init__(
        self,
        pattern: DynamicString,
        text: DynamicString,
        lf: LocalFunction,
        mode: Union[EngineMode, str] = EngineMode.AMORTIZED,
        grain_divisor: int = DEFAULT_GRAIN_DIVISOR,
        solver: Optional[BatchSolver] = None,
        name: Optional[str] = None,
    ):
        super().__init__(name or f"lazy_{lf.id.value}")
        if pattern.alphabet.wildcard_enabled != text.alphabet.wildcard_enabled:
            raise SolverMismatchError("Pattern and text must agree on wildcard support")
        if len(pattern) > len(text):
            raise WindowOutOfRangeError(
                f"Pattern length {len(pattern)} exceeds text length {len(text)}"
            )
        self.lf = lf
        self.mode = EngineMode(mode)
        self.grain_divisor = grain_divisor
        alphabet = max(pattern.alphabet, text.alphabet, key=lambda a: a.size)
        self.solver = solver or lf.solver_for(alphabet)

        self.pattern = pattern.copy(StringRole.PATTERN)
        self.text = text.copy(StringRole.TEXT)
        self.m = len(self.pattern)
        self.n = len(self.text)

        self.pending_job: Optional[ResumableRebuild] = None
        self.forced_completions = 0
        self.monolithic_rebuilds = 0

        started = self._log_rebuild_start(f"initial build n={self.n} m={self.m}")
        self.pattern_snapshot = self.pattern.snapshot()
        self.text_snapshot = self.text.snapshot()
        self.table = self._install(self.solver.solve(self.pattern, self.text))
        self._log_rebuild_end(f"initial build, {self.table.work_units} work units", started)

        self.initial_build_work = self.table.work_units
        self.log = UpdateLog(1)
        self._size_log(self.table.work_units)

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def capacity(self) -> int:
        return self.log.capacity

    @property
    def log_len(self) -> int:
        return len(self.log)

    @property
    def num_alignments(self) -> int:
        return self.n - self.m + 1

    def _size_log(self, total_work: int) -> None:
        """Restart interval and log capacity for a rebuild of `total_work` units"""
        self.batch_work = total_work
        if self.mode is EngineMode.AMORTIZED:
            self.restart_interval = max(1, ceil_sqrt(total_work))
            capacity = self.restart_interval
        else:
            self.restart_interval = max(1, ceil_div(ceil_sqrt(total_work), 2))
            # a job started now runs at most restart_interval updates on top of the log
            capacity = max(2 * self.restart_interval, len(self.log) + self.restart_interval)
        self.log.resize(max(capacity, len(self.log) + 1))

    def _install(self, table: AlignmentTable) -> AlignmentTable:
        if table.remapped:
            raise SolverMismatchError(
                "Alignment table was built on rank-remapped symbols; local corrections "
                "need raw symbol values"
            )
        return table

    # ------------------------------------------------------------------
    # Updates
    # ------------------------------------------------------------------

    def update(self, u: Update) -> None:
        live = self.pattern if u.target is StringRole.PATTERN else self.text
        if self.mode is EngineMode.DEAMORTIZED and self.log.is_full:
            self._force_completion()
        applied = live.apply_update(u.position, u.new_symbol)
        self.log.append(applied)
        work = 1
        if self.mode is EngineMode.AMORTIZED:
            if self.log.is_full:
                work += self._rebuild_now()
        else:
            work += self._advance_job()
        self.work_units_last_op = work

    def _rebuild_now(self) -> int:
        plan = self.solver.plan(self.pattern, self.text)
        interval = max(1, ceil_sqrt(plan.total_work))
        if interval > len(self.log):
            self.logger.debug(
                f"Rebuild work grew to {plan.total_work} units; extending the log to {interval}"
            )
            self.batch_work = plan.total_work
            self.restart_interval = interval
            self.log.resize(interval)
            return 0
        started = self._log_rebuild_start(f"log full ({len(self.log)} updates)")
        self.pattern_snapshot = self.pattern.snapshot()
        self.text_snapshot = self.text.snapshot()
        self.table = self._install(plan.execute())
        self.log.clear()
        self._size_log(self.table.work_units)
        self.rebuilds_total += 1
        self.monolithic_rebuilds += 1
        self._log_rebuild_end(f"{self.table.work_units} work units", started)
        return self.table.work_units

    def _start_job(self) -> None:
        pattern_snapshot = self.pattern.snapshot()
        text_snapshot = self.text.snapshot()
        plan = self.solver.plan(self.pattern, self.text)
        self._size_log(plan.total_work)
        budget = deamortized_budget(plan.total_work, self.restart_interval)
        grain = max(1, ceil_div(budget, self.grain_divisor))
        self.pending_job = ResumableRebuild(
            plan, pattern_snapshot, text_snapshot, budget, grain, log_start=len(self.log)
        )
        self.logger.debug(
            f"Started resumable rebuild: {plan.total_work} work units, "
            f"budget {budget}/update, grain {grain}"
        )

    def _advance_job(self) -> int:
        if self.pending_job is None:
            if len(self.log) < self.restart_interval:
                return 0
            self._start_job()
        spent = self.pending_job.step()
        if self.pending_job.is_complete:
            self._swap_in(self.pending_job)
        return spent

    def _swap_in(self, job: ResumableRebuild) -> None:
        self.table = self._install(job.result)
        self.pattern_snapshot = job.pattern_snapshot
        self.text_snapshot = job.text_snapshot
        self.log.drop_prefix(job.log_start)
        self.pending_job = None
        self.rebuilds_total += 1

    def _force_completion(self) -> None:
        self.logger.warning(
            f"Update log reached {self.log.capacity} entries before the pending rebuild "
            f"finished; completing it now"
        )
        if self.pending_job is None:
            self._start_job()
        self.pending_job.advance(None)
        self._swap_in(self.pending_job)
        self.forced_completions += 1
        self.monolithic_rebuilds += 1

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def query(self, i: int) -> int:
        return self.patch_query(i)

    def patch_query(self, i: int) -> int:
        """f(P_live, T_live[i..i+m-1]) from the stale table plus log corrections"""
        if not 1 <= i <= self.num_alignments:
            raise WindowOutOfRangeError(
                f"Alignment {i} outside [1, {self.num_alignments}]"
            )
        pattern_changes = self.log.fold(StringRole.PATTERN)
        text_changes = self.log.fold(StringRole.TEXT)
        cells = set(pattern_changes)
        for k in text_changes:
            if i <= k <= i + self.m - 1:
                cells.add(k - i + 1)

        value = self.table[i]
        g = self.lf.eval
        for j in cells:
            k = i + j - 1
            p_old, p_new = pattern_changes.get(j, (None, None))
            if p_old is None:
                p_old = p_new = int(self.pattern_snapshot[j - 1])
            t_old, t_new = text_changes.get(k, (None, None))
            if t_old is None:
                t_old = t_new = int(self.text_snapshot[k - 1])
            value += g(p_new, t_new) - g(p_old, t_old)
        self.work_units_last_op = len(cells)
        return value

    def stats(self) -> Dict[str, Any]:
        stats = super().stats()
        stats.update({
            "mode": self.mode.value,
            "log_len": self.log_len,
            "capacity": self.capacity,
            "batch_work": self.batch_work,
            "forced_completions": self.forced_completions,
            "monolithic_rebuilds": self.monolithic_rebuilds,
        })
        return stats


def build(
    P: DynamicString,
    T: DynamicString,
    lf: LocalFunction,
    mode: Union[EngineMode, str] = EngineMode.AMORTIZED,
) -> LazyStructure:
    return LazyStructure(P, T, lf, mode)


def update(ls: LazyStructure, u: Update) -> None:
    ls.update(u)


def patch_query(ls: LazyStructure, i: int) -> int:
    return ls.patch_query(i)
