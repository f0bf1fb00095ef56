"""
Brute-force oracles for every alignment function and reduction target.
"""

from .naive import (
    naive_cross_correlate,
    naive_dominance,
    naive_em,
    naive_hd,
    naive_ip,
    naive_omv,
    naive_table,
)

__all__ = [
    "naive_cross_correlate",
    "naive_dominance",
    "naive_em",
    "naive_hd",
    "naive_ip",
    "naive_omv",
    "naive_table",
]
