import numpy as np
import pytest

from src.convolution.batch_solvers import InnerProductSolver, LargeAlphabetHammingSolver
from src.engine import HAMMING, INNER_PRODUCT, ResumableRebuild, deamortized_budget, local_function
from src.core.data_models import Alphabet
from src.core.exceptions import SolverMismatchError


def test_deamortized_budget():
    assert deamortized_budget(100, 10) == 10
    assert deamortized_budget(101, 10) == 11
    assert deamortized_budget(0, 10) == 1
    assert deamortized_budget(50, 0) == 50


def test_resumable_rebuild_matches_monolithic(rng):
    p = rng.integers(0, 200, size=12)
    t = rng.integers(0, 200, size=50)
    solver = LargeAlphabetHammingSolver()
    expected = solver.solve(p, t).as_list()
    plan = solver.plan(p, t)
    job = ResumableRebuild(plan, p.copy(), t.copy(), budget_per_step=40, grain=10, log_start=3)
    steps = 0
    cursors = []
    while not job.is_complete:
        spent = job.step()
        assert spent <= 40 + 10
        cursors.append(job.cursor)
        steps += 1
    assert job.result.as_list() == expected
    assert job.work_done == plan.total_work
    assert cursors == sorted(cursors)
    assert steps >= plan.total_work // 50
    assert job.step() == 0


def test_advance_to_completion(rng):
    p = rng.integers(0, 9, size=6)
    t = rng.integers(0, 9, size=20)
    plan = InnerProductSolver().plan(p, t)
    job = ResumableRebuild(plan, p, t, budget_per_step=1, grain=1)
    assert job.advance(None) == plan.total_work
    assert job.is_complete


def test_local_functions():
    assert local_function("hd") is HAMMING
    assert HAMMING.total([1, 0, 2], [1, 1, 1]) == 2
    assert INNER_PRODUCT.total([1, 2], [3, 4]) == 11
    with pytest.raises(SolverMismatchError):
        local_function("lcs")
    with pytest.raises(SolverMismatchError):
        INNER_PRODUCT.solver_for(Alphabet.binary(wildcard=True))
    assert isinstance(HAMMING.solver_for(Alphabet.polynomial(1000)), LargeAlphabetHammingSolver)
