"""
Tensor package initialization: bounded semantics of tensor elements
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .enumeration import NfImage, enumerate_nf_image
from .equality import (
    TensorEqualityChecker, nf_member, equal_bounded, is_equal_bounded,
    bounded_expression_algebra, EQUAL_UP_TO_BOUND, DISTINCT
)
from .centralizer import centralizer_check_bounded
from .recognizer import stack_recognize, open_run_width
from .shape import outer_body, splice_violation, check_splice_condition

__all__ = [
    'NfImage',
    'enumerate_nf_image',
    'TensorEqualityChecker',
    'nf_member',
    'equal_bounded',
    'is_equal_bounded',
    'bounded_expression_algebra',
    'EQUAL_UP_TO_BOUND',
    'DISTINCT',
    'centralizer_check_bounded',
    'stack_recognize',
    'open_run_width',
    'outer_body',
    'splice_violation',
    'check_splice_condition'
]
