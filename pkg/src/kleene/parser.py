"""
parser.py - Text syntax for tensor expressions

    sum     := product ('+' product)*
    product := factor ('.'? factor)*
    factor  := base '*'*
    base    := '0' | '1' | letter | p<digits> | q<digits> | '(' sum ')'

Letters are a-z except the reserved p and q; any other single character can be
written quoted, e.g. '('. With aliases on (m = 2 only), b, p, d, q stand for
p0, p1, q0, q1.
"""

from typing import List, Optional, Tuple
import logging

from src.kleene.expressions import (
    TensorExpr, ExprKind, ZERO, ONE, atom, plus, times, star
)
from src.rewriting.tokens import Token, TokenKind, letter, open_bracket, close_bracket
from src.utils.errors import ExpressionSyntaxError, BracketIndexError

# Configure logging
logger = logging.getLogger(__name__)

_ALIASES = {'b': (TokenKind.OPEN, 0), 'p': (TokenKind.OPEN, 1),
            'd': (TokenKind.CLOSE, 0), 'q': (TokenKind.CLOSE, 1)}


class _Lexer:
    """Splits expression text into (kind, value, position) lexemes"""

    def __init__(self, text: str, m: Optional[int], aliases: bool):
        self.text = text
        self.m = m
        self.aliases = aliases

    def lexemes(self) -> List[Tuple[str, object, int]]:
        text = self.text
        out: List[Tuple[str, object, int]] = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "+.*()":
                out.append((ch, None, i))
                i += 1
            elif ch in "01":
                out.append(('const', ch, i))
                i += 1
            elif ch == "'":
                if i + 2 >= len(text) or text[i + 2] != "'":
                    raise ExpressionSyntaxError("Unterminated quoted letter", i)
                out.append(('token', letter(text[i + 1]), i))
                i += 3
            elif ch in "pq" and i + 1 < len(text) and text[i + 1].isdigit():
                j = i + 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                index = int(text[i + 1:j])
                if self.m is not None and index >= self.m:
                    raise BracketIndexError(index, self.m, i)
                token = open_bracket(index) if ch == 'p' else close_bracket(index)
                out.append(('token', token, i))
                i = j
            elif self.aliases and ch in _ALIASES:
                kind, index = _ALIASES[ch]
                token = open_bracket(index) if kind is TokenKind.OPEN else close_bracket(index)
                out.append(('token', token, i))
                i += 1
            elif 'a' <= ch <= 'z' and ch not in "pq":
                out.append(('token', letter(ch), i))
                i += 1
            else:
                raise ExpressionSyntaxError(f"Unexpected character {ch!r}", i)
        return out


class _Parser:
    """Recursive-descent parser over lexemes"""

    def __init__(self, lexemes: List[Tuple[str, object, int]], length: int):
        self.lexemes = lexemes
        self.pos = 0
        self.length = length

    def peek(self) -> Optional[str]:
        return self.lexemes[self.pos][0] if self.pos < len(self.lexemes) else None

    def where(self) -> int:
        return self.lexemes[self.pos][2] if self.pos < len(self.lexemes) else self.length

    def parse(self) -> TensorExpr:
        if not self.lexemes:
            raise ExpressionSyntaxError("Empty expression", 0)
        expr = self.parse_sum()
        if self.pos != len(self.lexemes):
            raise ExpressionSyntaxError("Unexpected input", self.where())
        return expr

    def parse_sum(self) -> TensorExpr:
        terms = [self.parse_product()]
        while self.peek() == '+':
            self.pos += 1
            terms.append(self.parse_product())
        return plus(*terms)

    def parse_product(self) -> TensorExpr:
        factors = [self.parse_factor()]
        while True:
            kind = self.peek()
            if kind == '.':
                self.pos += 1
                factors.append(self.parse_factor())
            elif kind in ('const', 'token', '('):
                factors.append(self.parse_factor())
            else:
                break
        return times(*factors)

    def parse_factor(self) -> TensorExpr:
        base = self.parse_base()
        while self.peek() == '*':
            self.pos += 1
            base = star(base)
        return base

    def parse_base(self) -> TensorExpr:
        kind = self.peek()
        if kind is None:
            raise ExpressionSyntaxError("Unexpected end of expression", self.where())
        _, value, position = self.lexemes[self.pos]
        if kind == 'const':
            self.pos += 1
            return ZERO if value == '0' else ONE
        if kind == 'token':
            self.pos += 1
            return atom(value)
        if kind == '(':
            self.pos += 1
            inner = self.parse_sum()
            if self.peek() != ')':
                raise ExpressionSyntaxError("Missing closing parenthesis", self.where())
            self.pos += 1
            return inner
        raise ExpressionSyntaxError(f"Unexpected {kind!r}", position)


def regex_parse(text: str, m: Optional[int] = None, aliases: bool = False) -> TensorExpr:
    """
    Parse expression text

    Args:
        text (str): expression text
        m (Optional[int]): bracket count; indices >= m are rejected when given
        aliases (bool): accept b, p, d, q as the two-pair bracket names

    Returns:
        TensorExpr: the canonicalized expression

    Raises:
        ExpressionSyntaxError: malformed text, with the offending position
        BracketIndexError: bracket index >= m
    """
    if aliases and m is not None and m != 2:
        raise ExpressionSyntaxError("Bracket aliases need m=2", 0)
    lexemes = _Lexer(text, m, aliases).lexemes()
    return _Parser(lexemes, len(text)).parse()


def regex_print(expr: TensorExpr) -> str:
    """
    Print an expression so that regex_parse reads it back to the same node

    Args:
        expr (TensorExpr): expression

    Returns:
        str: text with minimal parentheses
    """
    cache = {}

    def render(node: TensorExpr) -> Tuple[str, int]:
        key = id(node)
        if key in cache:
            return cache[key]
        if node.kind is ExprKind.ZERO:
            result = ("0", 3)
        elif node.kind is ExprKind.ONE:
            result = ("1", 3)
        elif node.kind is ExprKind.ATOM:
            result = (str(node.token), 3)
        elif node.kind is ExprKind.SUM:
            result = (" + ".join(render(c)[0] for c in node.children), 0)
        elif node.kind is ExprKind.PRODUCT:
            parts = []
            for child in node.children:
                text, prec = render(child)
                parts.append(f"({text})" if prec < 1 else text)
            result = (" ".join(parts), 1)
        else:
            text, prec = render(node.children[0])
            result = (f"({text})*" if prec < 2 else f"{text}*", 2)
        cache[key] = result
        return result

    return render(expr)[0]
