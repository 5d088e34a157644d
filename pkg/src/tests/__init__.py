"""
Tests package initialization for the tensor Kleene algebra toolkit
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

# Import test components at package level if needed
from .test_kleene import run_tests as run_kleene_tests
from .test_rewriting import run_tests as run_rewriting_tests
from .test_tensor import run_tests as run_tensor_tests
from .test_normal_forms import run_tests as run_normal_form_tests
from .test_braket import run_tests as run_braket_tests
from .test_grammar import run_tests as run_grammar_tests
from .test_cli import run_tests as run_cli_tests
from .test_monitoring_utils import run_tests as run_monitoring_tests

__all__ = [
    'run_kleene_tests',
    'run_rewriting_tests',
    'run_tensor_tests',
    'run_normal_form_tests',
    'run_braket_tests',
    'run_grammar_tests',
    'run_cli_tests',
    'run_monitoring_tests'
]
