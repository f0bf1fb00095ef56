"""
Brute-force reference answers.

Plain Python loops over plain lists: no convolution, no numpy tricks, so
the oracles cannot share a bug with the structures they check.
"""

from typing import List, Sequence, Tuple

from ..core.constants import WILDCARD
from ..core.exceptions import WindowOutOfRangeError


def _symbols(s) -> List[int]:
    if hasattr(s, "symbols"):
        s = s.symbols
    return [int(v) for v in s]


def _window(pattern, text, i: int) -> Tuple[List[int], List[int]]:
    p = _symbols(pattern)
    t = _symbols(text)
    if not p or i < 1 or i + len(p) - 1 > len(t):
        raise WindowOutOfRangeError(
            f"Window [{i}, {i + len(p) - 1}] exceeds text bounds [1, {len(t)}]"
        )
    return p, t[i - 1:i - 1 + len(p)]


def naive_hd(pattern, text, i: int) -> int:
    p, w = _window(pattern, text, i)
    return sum(1 for a, b in zip(p, w) if a != b)


def naive_ip(pattern, text, i: int) -> int:
    p, w = _window(pattern, text, i)
    return sum(a * b for a, b in zip(p, w))


def naive_em(pattern, text, i: int) -> Tuple[bool, int, int]:
    """(wildcard match, mismatching non-wildcard pairs, sum of a*b*(a-b)^2)"""
    p, w = _window(pattern, text, i)
    mismatches = 0
    weighted = 0
    for a, b in zip(p, w):
        if a != WILDCARD and b != WILDCARD and a != b:
            mismatches += 1
        weighted += a * b * (a - b) * (a - b)
    return mismatches == 0, mismatches, weighted


def naive_table(f, pattern, text) -> List[int]:
    """f at every alignment"""
    m = len(_symbols(pattern))
    n = len(_symbols(text))
    return [f(pattern, text, i) for i in range(1, n - m + 2)]


def naive_cross_correlate(a: Sequence[int], b: Sequence[int]) -> List[int]:
    a = [int(v) for v in a]
    b = [int(v) for v in b]
    return [
        sum(b[j] * a[i + j] for j in range(len(b)))
        for i in range(len(a) - len(b) + 1)
    ]


def naive_omv(inst) -> List[List[int]]:
    """Row t of the result is M v_t (0/1 entries)"""
    results = []
    for v in inst.vectors:
        row = []
        for matrix_row in inst.matrix:
            row.append(1 if any(int(m) and int(x) for m, x in zip(matrix_row, v)) else 0)
        results.append(row)
    return results


def naive_dominance(grid, x: int, y: int) -> int:
    """Sum of weights at points (a, b) with a <= x and b <= y"""
    total = 0
    for (a, b), weight in zip(grid.points, grid.weights):
        if a <= x and b <= y:
            total += int(weight)
    return total
