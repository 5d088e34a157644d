"""
Kleene package initialization: expressions, algebras, matrices and automata
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .expressions import (
    TensorExpr, ExprKind, ZERO, ONE, zero, one, atom, plus, times, star, sum_of,
    word_expr, postorder, substitute, tokens_of, max_bracket_index, is_bracket_free,
    node_count, pi_expr, completeness_sum
)
from .parser import regex_parse, regex_print
from .algebra import KleeneAlgebra, BooleanAlgebra, ExpressionAlgebra, boolean_algebra, expression_algebra
from .matrix import SquareMatrix, matrix_star
from .automaton import Automaton, automaton_language, vector_language
from .positions import PositionAutomaton

__all__ = [
    'TensorExpr',
    'ExprKind',
    'ZERO',
    'ONE',
    'zero',
    'one',
    'atom',
    'plus',
    'times',
    'star',
    'sum_of',
    'word_expr',
    'postorder',
    'substitute',
    'tokens_of',
    'max_bracket_index',
    'is_bracket_free',
    'node_count',
    'pi_expr',
    'completeness_sum',
    'regex_parse',
    'regex_print',
    'KleeneAlgebra',
    'BooleanAlgebra',
    'ExpressionAlgebra',
    'boolean_algebra',
    'expression_algebra',
    'SquareMatrix',
    'matrix_star',
    'Automaton',
    'automaton_language',
    'vector_language',
    'PositionAutomaton'
]
