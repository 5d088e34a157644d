"""
centralizer.py - Bounded centralizer test
"""

from typing import Optional
import logging

from src.kleene.expressions import TensorExpr
from src.tensor.enumeration import enumerate_nf_image

# Configure logging
logger = logging.getLogger(__name__)


def centralizer_check_bounded(expr: TensorExpr, bound: Optional[int] = None,
                              word_cap: Optional[int] = None) -> bool:
    """
    Necessary test for membership in the centralizer: every normal form whose
    source fits the bound is bracket-free
    """
    image = enumerate_nf_image(expr, bound, word_cap)
    result = image.is_bracket_free()
    if not result:
        offending = next(w for w in image.sorted_words() if not w.is_bracket_free())
        logger.info(f"Centralizer test fails on {offending}")
    return result
