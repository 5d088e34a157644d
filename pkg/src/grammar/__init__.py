"""
Grammar package initialization: context-free grammars, oracles and conversions
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .cfg import Grammar, Production, parse_grammar, format_grammar
from .normalize import normalize, remove_useless, prune, nullable_symbols, fresh_symbol
from .cyk import ChomskyGrammar, to_cnf, cyk_member
from .generation import cfg_enumerate, word_strings, derives
from .regular import RegularProductions
from .bridge import cfg_to_expr, expr_to_cfg

__all__ = [
    'Grammar',
    'Production',
    'parse_grammar',
    'format_grammar',
    'normalize',
    'remove_useless',
    'prune',
    'nullable_symbols',
    'fresh_symbol',
    'ChomskyGrammar',
    'to_cnf',
    'cyk_member',
    'cfg_enumerate',
    'word_strings',
    'derives',
    'RegularProductions',
    'cfg_to_expr',
    'expr_to_cfg'
]
