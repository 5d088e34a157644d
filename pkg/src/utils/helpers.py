"""
helpers.py - General utility functions for the tensor Kleene algebra toolkit
"""

import time
from typing import Dict, Any, Iterable, Sequence, Tuple
import logging

from src.utils.errors import ToolkitError

# Configure logging
logger = logging.getLogger(__name__)

GRAMMAR_STYLES = ('closure', 'dyck')


class UtilityHelper:
    """
    Collection of general utility helper functions
    """

    @staticmethod
    def format_timestamp(timestamp: float = None) -> str:
        """
        Format timestamp into readable string

        Args:
            timestamp (float): Unix timestamp

        Returns:
            str: Formatted time string
        """
        if timestamp is None:
            timestamp = time.time()
        return time.strftime('%Y-%m-%d %H:%M:%S', time.localtime(timestamp))

    @staticmethod
    def validate_config(config_data: Dict[str, Any]) -> bool:
        """
        Validate configuration values

        Args:
            config_data (Dict): Configuration to validate

        Returns:
            bool: True if valid

        Raises:
            ToolkitError: on the first out-of-range value
        """
        checks = [
            ('m', lambda v: isinstance(v, int) and v >= 2, "must be an integer >= 2"),
            ('bound', lambda v: isinstance(v, int) and v >= 0, "must be a non-negative integer"),
            ('trunc', lambda v: isinstance(v, int) and v >= 1, "must be a positive integer"),
            ('word_cap', lambda v: isinstance(v, int) and v >= 1, "must be a positive integer"),
            ('stack_factor', lambda v: isinstance(v, int) and v >= 1, "must be a positive integer"),
            ('node_cap', lambda v: isinstance(v, int) and v >= 1, "must be a positive integer"),
            ('member_depth', lambda v: v is None or (isinstance(v, int) and v >= 0),
             "must be empty or a non-negative integer"),
            ('grammar_style', lambda v: v in GRAMMAR_STYLES, f"must be one of {GRAMMAR_STYLES}"),
        ]

        for field, check, hint in checks:
            if field in config_data and not check(config_data[field]):
                logger.warning(f"Invalid configuration field {field}={config_data[field]!r}")
                raise ToolkitError(f"Configuration field '{field}' {hint}",
                                   {'field': field, 'value': config_data[field]})
        return True

    @staticmethod
    def sorted_words(words: Iterable[Sequence[Any]]) -> list:
        """Sort words lexicographically by their printed tokens, shortest key first on ties"""
        return sorted(words, key=lambda w: tuple(str(t) for t in w))

    @staticmethod
    def format_word(tokens: Sequence[Any]) -> str:
        """Whitespace-separated tokens, with 1 for the empty word"""
        if len(tokens) == 0:
            return "1"
        return " ".join(str(t) for t in tokens)

    @staticmethod
    def pairs_text(pairs: Iterable[Tuple[int, int]]) -> str:
        return " ".join(f"({a},{b})" for a, b in sorted(pairs))


# Main utility helper instance
utility_helper = UtilityHelper()
