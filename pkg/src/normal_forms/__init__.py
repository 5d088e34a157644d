"""
Normal forms package initialization: split automata, centralizer matrices and normal forms
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .split_automaton import SplitAutomaton, compile_automaton
from .centralizer_matrix import CentralizerMatrix, compute_N
from .normal_form import (
    NormalForm, NormalFormKind, first_normal_form, reduced_normal_form, project_centralizer
)
from .combinators import (
    COMBINATORS, nf_combine, normal_form_of, constant_normal_form, atom_normal_form,
    bracket_normal_form
)

__all__ = [
    'SplitAutomaton',
    'compile_automaton',
    'CentralizerMatrix',
    'compute_N',
    'NormalForm',
    'NormalFormKind',
    'first_normal_form',
    'reduced_normal_form',
    'project_centralizer',
    'COMBINATORS',
    'nf_combine',
    'normal_form_of',
    'constant_normal_form',
    'atom_normal_form',
    'bracket_normal_form'
]
