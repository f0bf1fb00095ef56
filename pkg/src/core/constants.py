"""
Constants Module

This module contains the system-wide constants, defaults and schemas used by the
dynamic string structures, the reduction gadgets and the benchmark harness.

Categories:
- Alphabet Limits
- Number-Theoretic Transform Primes
- Engine Defaults
- Approximation Defaults
- Error Codes
- Benchmark CSV Schema
- Settings Defaults and Validation Schema

Author: Dynamic Strings Team
Version: 1.0.0
"""

from typing import Any, Dict, List, Tuple

# =============================================================================
# ALPHABET LIMITS
# =============================================================================

BINARY_ALPHABET_SIZE: int = 2
TERNARY_ALPHABET_SIZE: int = 3
MAX_CONSTANT_ALPHABET: int = 64
MAX_POLYNOMIAL_ALPHABET: int = 2 ** 31

# Reserved symbol value when wildcards are enabled
WILDCARD: int = 0

# =============================================================================
# NUMBER-THEORETIC TRANSFORM PRIMES
# =============================================================================

# (prime, primitive root, log2 of the largest power-of-two order it supports)
# Ordered by preference; the engine uses the shortest prefix whose product
# exceeds the coefficient bound of a correlation.
NTT_PRIMES: List[Tuple[int, int, int]] = [
    (998244353, 3, 23),
    (167772161, 3, 25),
    (469762049, 3, 26),
    (754974721, 11, 24),
    (2013265921, 31, 27),
]

# =============================================================================
# ENGINE DEFAULTS
# =============================================================================

# Fraction of the per-update budget a single resumable step may consume
DEFAULT_GRAIN_DIVISOR: int = 4

DEFAULT_ENGINE_MODE: str = 'amortized'

# Bound pinned by the cadence tests: per-operation work <= factor * sqrt(W)
DEAMORTIZED_WORK_FACTOR: float = 4.0

# =============================================================================
# APPROXIMATION DEFAULTS
# =============================================================================

DEFAULT_APPROX_CONSTANTS: Dict[str, float] = {
    'c_map': 4.0,
    'c_d': 8.0,
    'c_s': 2.0,
    'c_r': 3.0,
}

# Amplification constant for the randomized OMv gadgets
DEFAULT_AMPLIFICATION: float = 3.0

# Decision threshold for approximate inner products
APPROX_IP_THRESHOLD: float = 0.5

# =============================================================================
# ERROR CODES
# =============================================================================

ERROR_CODES: Dict[str, str] = {
    'GENERIC': 'E000',
    'POSITION_OUT_OF_RANGE': 'E001',
    'WINDOW_OUT_OF_RANGE': 'E002',
    'INVALID_SYMBOL': 'E003',
    'ALPHABET': 'E004',
    'LOG_CAPACITY': 'E005',
    'CONVOLUTION': 'E006',
    'COEFFICIENT_BOUND': 'E007',
    'ALPHABET_TOO_LARGE': 'E008',
    'SOLVER_MISMATCH': 'E009',
    'UPDATE_MODEL': 'E010',
    'UNSUPPORTED_OPERATION': 'E011',
    'INVARIANT_BREACH': 'E012',
    'REDUCTION': 'E013',
    'DIMENSION_MISMATCH': 'E014',
    'SHAPE_CAPACITY': 'E015',
    'CONFIGURATION': 'E016',
    'WORKLOAD_SPEC': 'E017',
}

# =============================================================================
# BENCHMARK CSV SCHEMA
# =============================================================================

WORKLOAD_SCHEMA_VERSION: str = 'dynstring-workload/1'
GADGET_SCHEMA_VERSION: str = 'dynstring-gadget/1'

WORKLOAD_CSV_COLUMNS: List[str] = [
    'schema_version', 'problem', 'alphabet', 'n', 'm', 'model', 'epsilon',
    'op_kind', 'median_ns', 'p99_ns', 'work_units_median', 'rebuilds', 'coverage',
]

GADGET_CSV_COLUMNS: List[str] = [
    'schema_version', 'gadget', 'r', 'seed', 'backend_updates', 'backend_queries',
    'elapsed_ns', 'false_positives', 'false_negatives', 'correct',
]

# =============================================================================
# SETTINGS DEFAULTS AND VALIDATION SCHEMA
# =============================================================================

ENV_PREFIX: str = 'DYNSTR_'

DEFAULT_SETTINGS: Dict[str, Any] = {
    'log_level': 'INFO',
    'engine': {
        'mode': DEFAULT_ENGINE_MODE,
        'grain_divisor': DEFAULT_GRAIN_DIVISOR,
    },
    'approx': dict(DEFAULT_APPROX_CONSTANTS),
    'reductions': {
        'c_amp': DEFAULT_AMPLIFICATION,
    },
    'bench': {
        'verify': True,
        'ratio': '1:1',
    },
}

# Environment keys (without prefix) -> (settings path, type)
ENV_SETTINGS_MAP: Dict[str, Tuple[Tuple[str, ...], type]] = {
    'log_level': (('log_level',), str),
    'engine_mode': (('engine', 'mode'), str),
    'grain_divisor': (('engine', 'grain_divisor'), int),
    'c_map': (('approx', 'c_map'), float),
    'c_d': (('approx', 'c_d'), float),
    'c_s': (('approx', 'c_s'), float),
    'c_r': (('approx', 'c_r'), float),
    'c_amp': (('reductions', 'c_amp'), float),
    'verify': (('bench', 'verify'), bool),
}

_POSITIVE_NUMBER: Dict[str, Any] = {"type": "number", "exclusiveMinimum": 0}

SETTINGS_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "log_level": {"type": "string", "enum": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]},
        "engine": {
            "type": "object",
            "properties": {
                "mode": {"type": "string", "enum": ["amortized", "deamortized"]},
                "grain_divisor": {"type": "integer", "minimum": 1},
            },
        },
        "approx": {
            "type": "object",
            "properties": {
                "c_map": _POSITIVE_NUMBER,
                "c_d": _POSITIVE_NUMBER,
                "c_s": _POSITIVE_NUMBER,
                "c_r": _POSITIVE_NUMBER,
            },
        },
        "reductions": {
            "type": "object",
            "properties": {"c_amp": _POSITIVE_NUMBER},
        },
        "bench": {
            "type": "object",
            "properties": {
                "verify": {"type": "boolean"},
                "ratio": {"type": "string", "pattern": r"^\d+:\d+$"},
            },
        },
    },
    "required": ["log_level", "engine", "approx", "reductions"],
}
