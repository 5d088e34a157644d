"""
Rewriting package initialization: polycyclic normal forms and bracket recodings
"""

__version__ = "1.0.0"
__author__ = "TKA Team"

from .tokens import (
    Token, TokenKind, NormalFormWord, ZERO_TOKEN, ZERO_WORD, EMPTY_WORD,
    letter, open_bracket, close_bracket, parse_token, parse_word, letters_of
)
from .normal_form import nf_reduce, nf_mul, nf_word, rewrite_successors, all_normal_forms
from .recoding import RecodingMode, encode_token, encode_brackets

__all__ = [
    'Token',
    'TokenKind',
    'NormalFormWord',
    'ZERO_TOKEN',
    'ZERO_WORD',
    'EMPTY_WORD',
    'letter',
    'open_bracket',
    'close_bracket',
    'parse_token',
    'parse_word',
    'letters_of',
    'nf_reduce',
    'nf_mul',
    'nf_word',
    'rewrite_successors',
    'all_normal_forms',
    'RecodingMode',
    'encode_token',
    'encode_brackets'
]
