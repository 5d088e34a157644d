"""
Utilities package initialization for the tensor Kleene algebra toolkit
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .errors import ToolkitError
from .config import ToolkitConfig, default_config
from .helpers import UtilityHelper, utility_helper
from .decorators import performance_monitor

__all__ = [
    'ToolkitError',
    'ToolkitConfig',
    'default_config',
    'UtilityHelper',
    'utility_helper',
    'performance_monitor'
]
