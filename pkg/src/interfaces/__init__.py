"""
Interfaces package initialization: command line and input validation
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .cli import CommandLineInterface, build_parser, dispatch, main
from .validation import InputValidator, command_validator, input_validator

__all__ = [
    'CommandLineInterface',
    'build_parser',
    'dispatch',
    'main',
    'InputValidator',
    'command_validator',
    'input_validator'
]
