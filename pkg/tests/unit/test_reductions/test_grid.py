import itertools

import pytest

from src.core.exceptions import DimensionMismatchError, ReductionError, ShapeCapacityError
from src.oracle.naive import naive_dominance
from src.reductions import (
    CountingBackend,
    GridEncoder,
    GridInstance,
    range_count_via_dynip,
    range_empty_via_approx_dynip,
    range_empty_via_dynem,
)
from src.reductions.grid import COUNT, EMPTY_APPROX_IP, EMPTY_EM


def _operations(rng, grid, count=30, max_weight=255):
    ops = []
    for _ in range(count):
        if rng.random() < 0.4:
            ops.append(("update", int(rng.integers(1, grid.r + 1)), int(rng.integers(0, max_weight + 1))))
        else:
            ops.append(("query", int(rng.integers(1, grid.r + 1)), int(rng.integers(1, grid.r + 1))))
    return ops


def _expected(grid, operations, emptiness):
    mirror = grid.copy()
    answers = []
    for op in operations:
        if op[0] == "update":
            mirror.set_weight(op[1], op[2])
        else:
            total = naive_dominance(mirror, op[1], op[2])
            answers.append(total == 0 if emptiness else total)
    return answers


def test_layout():
    encoder = GridEncoder(GridInstance.random(3, seed=0))
    assert encoder.m == 27
    assert [encoder.slot_position(s) for s in (1, 2, 3)] == [25, 26, 27]
    assert encoder.alignment(0) == 25
    assert encoder.alignment(encoder.capacity - 1) == 1


@pytest.mark.parametrize("seed", range(3))
def test_range_counting(rng, seed):
    grid = GridInstance.random(3, seed)
    ops = _operations(rng, grid)
    result = range_count_via_dynip(grid, ops)
    assert result.answers == _expected(grid, ops, emptiness=False)
    assert result.details["shapes_registered_late"] == 0


@pytest.mark.parametrize("seed", range(3))
def test_range_emptiness_via_matching(rng, seed):
    grid = GridInstance.random(3, seed, max_weight=1)
    ops = _operations(rng, grid, max_weight=1)
    result = range_empty_via_dynem(grid, ops)
    assert result.answers == _expected(grid, ops, emptiness=True)


@pytest.mark.parametrize("seed", range(3))
def test_range_emptiness_via_approx_ip(rng, seed):
    grid = GridInstance.random(3, seed, max_weight=1)
    ops = _operations(rng, grid, max_weight=1)
    result = range_empty_via_approx_dynip(grid, ops, epsilon=0.4, seed=seed)
    assert result.answers == _expected(grid, ops, emptiness=True)


def test_arbitrary_shapes_are_registered_late():
    grid = GridInstance(3, [(1, 1), (2, 2), (3, 3)], [5, 7, 11])
    encoder = GridEncoder(grid, COUNT)
    up_front = len(encoder.shapes)
    assert encoder.ask((1, 0, 1)) == 16
    assert encoder.ask((0, 1, 1)) == 18
    assert encoder.shapes_registered_late == 2
    assert len(encoder.shapes) == up_front + 2
    assert encoder.dominance(2, 2) == 12


@pytest.mark.parametrize("kind", [EMPTY_EM, EMPTY_APPROX_IP])
def test_arbitrary_shapes_for_emptiness(kind):
    grid = GridInstance(3, [(1, 1), (2, 2), (3, 3)], [0, 1, 0], max_weight=1)
    encoder = GridEncoder(grid, kind)
    assert encoder.ask((1, 0, 1)) is True
    assert encoder.ask((0, 1, 0)) is False
    encoder.set_weight(2, 0)
    assert encoder.ask((1, 1, 1)) is True


def test_running_out_of_segments():
    grid = GridInstance(5, [(k, k) for k in range(1, 6)], [1, 2, 3, 4, 5])
    encoder = GridEncoder(grid, COUNT)
    with pytest.raises(ShapeCapacityError):
        for shape in itertools.product([0, 1], repeat=5):
            encoder.register_shape(shape)
    assert len(encoder.shapes) == encoder.capacity


def test_shape_and_grid_validation():
    encoder = GridEncoder(GridInstance.empty(2))
    with pytest.raises(DimensionMismatchError):
        encoder.register_shape((1, 0, 1))
    with pytest.raises(DimensionMismatchError):
        GridInstance(2, [(1, 1)], [1])
    with pytest.raises(DimensionMismatchError):
        GridInstance(2, [(1, 1), (3, 1)], [1, 1])
    with pytest.raises(ReductionError):
        GridInstance(2, [(1, 1), (2, 1)], [1, 300])
    with pytest.raises(ReductionError):
        GridEncoder(GridInstance.empty(2), "sum")


def test_backend_dimension_check():
    encoder = GridEncoder(GridInstance.empty(2))
    with pytest.raises(DimensionMismatchError):
        CountingBackend(encoder.backend.structure).check_dimensions(8, 17)
