import itertools

import pytest

from src.core.data_models import StringRole, Update
from src.core.exceptions import ReductionError
from src.oracle.naive import naive_hd, naive_ip
from src.reductions import (
    IP_TO_HD,
    IPMOD2_TO_TERNARY_HD,
    decode_hd,
    decode_hd_mod2,
    ip_via_lifted_dynhd,
    ipmod2_via_lifted_ternary_dynhd,
    lift_ip_to_hd,
    lift_ipmod2_to_hdmod2_ternary,
)

from tests.strings import apply_to_mirror


def _all_pairs(m, n):
    for p in itertools.product([0, 1], repeat=m):
        for t in itertools.product([0, 1], repeat=n):
            yield list(p), list(t)


def test_ip_to_hd_exhaustive():
    for p, t in _all_pairs(3, 4):
        lp, lt = lift_ip_to_hd(p, t)
        for i in (1, 2):
            hd = naive_hd(lp, lt, 3 * (i - 1) + 1)
            assert decode_hd(hd, 3) == naive_ip(p, t, i)


def test_ipmod2_to_ternary_hd_exhaustive():
    for p, t in _all_pairs(3, 4):
        lp, lt = lift_ipmod2_to_hdmod2_ternary(p, t)
        assert set(lp.tolist()) | set(lt.tolist()) <= {0, 1, 2}
        for i in (1, 2):
            hd = naive_hd(lp, lt, 2 * (i - 1) + 1)
            assert decode_hd_mod2(hd % 2, 3) == naive_ip(p, t, i) % 2


def test_lift_update_touches_only_changed_cells():
    updates = IP_TO_HD.lift_update(Update.pattern(2, 1), old_symbol=0)
    assert [(u.position, u.new_symbol) for u in updates] == [(4, 1), (6, 1)]
    assert IP_TO_HD.lift_update(Update.text(1, 1), old_symbol=1) == []
    assert len(IPMOD2_TO_TERNARY_HD.lift_update(Update.text(3, 0), old_symbol=1)) == 2


def test_lift_rejects_non_binary():
    with pytest.raises(ReductionError):
        IP_TO_HD.lift([0, 2], StringRole.PATTERN)
    with pytest.raises(ReductionError):
        decode_hd(3, 4)


def _random_ops(rng, m, n, count=60):
    ops = []
    for _ in range(count):
        if rng.random() < 0.5:
            role = StringRole.PATTERN if rng.random() < 0.5 else StringRole.TEXT
            length = m if role is StringRole.PATTERN else n
            ops.append(Update(role, int(rng.integers(1, length + 1)), int(rng.integers(0, 2))))
        else:
            ops.append(int(rng.integers(1, n - m + 2)))
    return ops


@pytest.mark.parametrize("modular", [False, True])
def test_lifted_gadgets_track_inner_products(rng, modular):
    m, n = 6, 14
    p = rng.integers(0, 2, size=m)
    t = rng.integers(0, 2, size=n)
    ops = _random_ops(rng, m, n)
    gadget = ipmod2_via_lifted_ternary_dynhd if modular else ip_via_lifted_dynhd
    result = gadget(p, t, ops)

    mirror = {StringRole.PATTERN: p.copy(), StringRole.TEXT: t.copy()}
    expected = []
    for op in ops:
        if isinstance(op, Update):
            apply_to_mirror(mirror, op)
        else:
            ip = naive_ip(mirror[StringRole.PATTERN], mirror[StringRole.TEXT], op)
            expected.append(ip % 2 if modular else ip)
    assert result.answers == expected
    assert result.backend_queries == len(expected)
