"""
(1+eps)-approximate Hamming distance: sparse JL sketches, canonical block
banks and alphabet-reducing mapping banks.
"""

from .canonical import CanonicalBank, TextSketchHD, approx_query_text_updates, decompose_window
from .mappings import MappingBank
from .pattern_sketch import PatternSketchHD, approx_query_pattern_updates
from .poly_alphabet import PolyAlphabetHD, approx_query_poly_alphabet
from .sketches import SketchBank, SketchParams, SparseJL, SymbolEncoder

__all__ = [
    "CanonicalBank",
    "MappingBank",
    "PatternSketchHD",
    "PolyAlphabetHD",
    "SketchBank",
    "SketchParams",
    "SparseJL",
    "SymbolEncoder",
    "TextSketchHD",
    "approx_query_pattern_updates",
    "approx_query_poly_alphabet",
    "approx_query_text_updates",
    "decompose_window",
]
