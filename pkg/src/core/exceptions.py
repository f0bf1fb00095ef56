"""
Exception hierarchy for the dynamic string structures.

Every error raised by library code derives from DynStringError and carries a
stable error code from ERROR_CODES.
"""

from typing import Dict, Optional

from .constants import ERROR_CODES


class DynStringError(Exception):
    """Base exception for all dynamic string errors"""

    error_key: str = 'GENERIC'

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        self.code = code or ERROR_CODES[self.error_key]

    def __str__(self) -> str:
        return f"[{self.code}] {super().__str__()}"


# Strings and updates

class PositionOutOfRangeError(DynStringError, IndexError):
    """A position lies outside the targeted string"""
    error_key = 'POSITION_OUT_OF_RANGE'


class WindowOutOfRangeError(PositionOutOfRangeError):
    """An alignment window does not fit inside the text"""
    error_key = 'WINDOW_OUT_OF_RANGE'


class InvalidSymbolError(DynStringError, ValueError):
    """A symbol is not valid for the declared alphabet"""
    error_key = 'INVALID_SYMBOL'


class AlphabetError(DynStringError, ValueError):
    """An alphabet declaration violates its kind's limits"""
    error_key = 'ALPHABET'


class LogCapacityError(DynStringError):
    """An update log was asked to hold more entries than its capacity"""
    error_key = 'LOG_CAPACITY'


# Batch solvers

class ConvolutionError(DynStringError):
    """Error raised by the exact convolution engine"""
    error_key = 'CONVOLUTION'


class CoefficientBoundError(ConvolutionError):
    """A correlation could overflow the configured modulus set"""
    error_key = 'COEFFICIENT_BOUND'


class AlphabetTooLargeError(DynStringError):
    """The alphabet is too large for the requested solver"""
    error_key = 'ALPHABET_TOO_LARGE'


class SolverMismatchError(DynStringError):
    """The strings' alphabets do not fit the requested local function"""
    error_key = 'SOLVER_MISMATCH'


# Dynamic structures

class UpdateModelViolationError(DynStringError):
    """An update targets a string the structure's update model keeps fixed"""
    error_key = 'UPDATE_MODEL'


class UnsupportedOperationError(DynStringError):
    """The operation is not defined for this problem"""
    error_key = 'UNSUPPORTED_OPERATION'


class InvariantBreachError(DynStringError):
    """An internal invariant failed; indicates a bug, not bad input"""
    error_key = 'INVARIANT_BREACH'


# Reductions

class ReductionError(DynStringError):
    """Error raised by a reduction gadget"""
    error_key = 'REDUCTION'


class DimensionMismatchError(ReductionError):
    """A backend's dimensions do not fit the encoded instance"""
    error_key = 'DIMENSION_MISMATCH'


class ShapeCapacityError(ReductionError):
    """The pattern has no free segment left for another query shape"""
    error_key = 'SHAPE_CAPACITY'


# Configuration and harness

class ConfigurationError(DynStringError):
    """Settings could not be loaded or failed validation"""
    error_key = 'CONFIGURATION'


class WorkloadSpecError(DynStringError, ValueError):
    """A workload specification failed validation"""
    error_key = 'WORKLOAD_SPEC'

    def __init__(self, message: str, field_errors: Optional[Dict[str, str]] = None):
        super().__init__(message)
        self.field_errors = field_errors or {}
