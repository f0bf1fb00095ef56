"""
Dynamic string alignment structures: exact, modular and approximate Hamming
distance, inner product and wildcard matching under character updates, with
reduction gadgets and a benchmark harness.
"""

__version__ = "1.0.0"
