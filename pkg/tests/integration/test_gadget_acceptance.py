import itertools

import numpy as np
import pytest

from src.oracle.naive import naive_dominance, naive_hd, naive_ip, naive_omv
from src.reductions import (
    GridInstance,
    OMvInstance,
    decode_hd,
    decode_hd_mod2,
    lift_ip_to_hd,
    lift_ipmod2_to_hdmod2_ternary,
    omv_text_only,
    omv_via_approx_dynip,
    omv_via_dynem,
    omv_via_dynip_mod2,
    range_count_via_dynip,
    range_empty_via_approx_dynip,
    range_empty_via_dynem,
)

SEEDS = range(100)


@pytest.mark.parametrize("seed", range(5))
def test_dynem_omv_r8(seed):
    inst = OMvInstance.random(8, seed)
    assert omv_via_dynem(inst).answers.tolist() == naive_omv(inst)


@pytest.mark.slow
def test_deterministic_omv_over_many_seeds():
    for seed in SEEDS:
        inst = OMvInstance.random(6, seed)
        expected = naive_omv(inst)
        assert omv_via_dynem(inst).answers.tolist() == expected, seed
        assert omv_via_approx_dynip(inst, epsilon=0.4, seed=seed).answers.tolist() == expected, seed


@pytest.mark.slow
@pytest.mark.parametrize("seed", SEEDS)
def test_randomized_omv_r8(seed):
    inst = OMvInstance.random(8, seed)
    expected = naive_omv(inst)
    assert omv_via_dynip_mod2(inst, repetitions=24, seed=seed).answers.tolist() == expected
    assert omv_text_only(inst, repetitions=24, seed=seed).answers.tolist() == expected


@pytest.mark.parametrize("seed", range(5))
def test_lifts_on_length_64(seed):
    rng = np.random.default_rng(seed)
    p = rng.integers(0, 2, size=64)
    t = rng.integers(0, 2, size=64)
    lp, lt = lift_ip_to_hd(p, t)
    assert decode_hd(naive_hd(lp, lt, 1), 64) == naive_ip(p, t, 1)
    tp, tt = lift_ipmod2_to_hdmod2_ternary(p, t)
    assert decode_hd_mod2(naive_hd(tp, tt, 1) % 2, 64) == naive_ip(p, t, 1) % 2


@pytest.mark.slow
@pytest.mark.parametrize("length", range(1, 9))
def test_lifts_on_every_binary_pair(length):
    words = [np.array(w) for w in itertools.product([0, 1], repeat=length)]
    for p in words:
        for t in words:
            ip = int(p @ t)
            lp, lt = lift_ip_to_hd(p, t)
            assert decode_hd(naive_hd(lp, lt, 1), length) == ip
            tp, tt = lift_ipmod2_to_hdmod2_ternary(p, t)
            assert decode_hd_mod2(naive_hd(tp, tt, 1) % 2, length) == ip % 2


def _grid_ops(rng, r, max_weight, count=50):
    ops = []
    for _ in range(count):
        if rng.random() < 0.5:
            ops.append(("update", int(rng.integers(1, r + 1)), int(rng.integers(0, max_weight + 1))))
        else:
            ops.append(("query", int(rng.integers(1, r + 1)), int(rng.integers(1, r + 1))))
    return ops


def _answers(grid, ops, emptiness):
    mirror = grid.copy()
    out = []
    for op in ops:
        if op[0] == "update":
            mirror.set_weight(op[1], op[2])
        else:
            total = naive_dominance(mirror, op[1], op[2])
            out.append(total == 0 if emptiness else total)
    return out


@pytest.mark.slow
def test_grid_r8_counting(rng):
    grid = GridInstance.random(8, seed=3)
    ops = _grid_ops(rng, 8, 255)
    assert range_count_via_dynip(grid, ops).answers == _answers(grid, ops, False)


@pytest.mark.slow
def test_grid_r8_emptiness(rng):
    grid = GridInstance.random(8, seed=4, max_weight=1)
    ops = _grid_ops(rng, 8, 1)
    assert range_empty_via_dynem(grid, ops).answers == _answers(grid, ops, True)


@pytest.mark.slow
def test_grid_gadgets_over_many_seeds():
    for seed in SEEDS:
        rng = np.random.default_rng(seed)
        grid = GridInstance.random(3, seed)
        ops = _grid_ops(rng, 3, 255, count=20)
        assert range_count_via_dynip(grid, ops).answers == _answers(grid, ops, False), seed
        binary = GridInstance.random(3, seed, max_weight=1)
        ops = _grid_ops(rng, 3, 1, count=20)
        expected = _answers(binary, ops, True)
        assert range_empty_via_dynem(binary, ops).answers == expected, seed
        assert range_empty_via_approx_dynip(binary, ops).answers == expected, seed
