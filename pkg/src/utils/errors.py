"""
errors.py - Exception hierarchy for the tensor Kleene algebra toolkit
"""

from typing import Dict, Any, Optional


class ToolkitError(Exception):
    """Base exception for all toolkit operations"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """
        Machine-readable form of the error, used by the CLI diagnostic stream

        Returns:
            dict: error message, exception type and details
        """
        return {
            'error': self.message,
            'type': type(self).__name__,
            'details': self.details
        }


class KleeneError(ToolkitError):
    """Errors raised by expressions, matrices and automata"""
    pass


class ExpressionSyntaxError(KleeneError):
    """Malformed expression text"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}", {'position': position})
        self.position = position


class BracketIndexError(KleeneError):
    """Bracket index outside the configured range 0 <= i < m"""

    def __init__(self, index: int, m: int, position: Optional[int] = None):
        details = {'index': index, 'm': m}
        if position is not None:
            details['position'] = position
        super().__init__(f"Bracket index {index} out of range for m={m}", details)
        self.index = index
        self.m = m


class MatrixDimensionError(KleeneError):
    pass


class AutomatonShapeError(KleeneError):
    pass


class RewriteError(ToolkitError):
    pass


class EnumerationOverflowError(ToolkitError):
    """Bounded enumeration produced more words than the configured cap"""
    pass


class ShapeViolationError(ToolkitError):
    """Input is not of the required p0.r.q0 shape or breaks a side condition"""
    pass


class SearchBudgetExceeded(ToolkitError):
    """The recognizer hit its node cap; this is not a rejection"""
    pass


class SplitShapeError(ToolkitError):
    pass


class CombinatorError(ToolkitError):
    pass


class ModelError(ToolkitError):
    pass


class GrammarError(ToolkitError):
    pass


class GenerationCapExceeded(ToolkitError):
    pass
