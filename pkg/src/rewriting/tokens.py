"""
tokens.py - Tokens and normal-form words of the polycyclic monoid with letters
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple
import logging

from src.utils.errors import RewriteError, BracketIndexError

# Configure logging
logger = logging.getLogger(__name__)

ZERO_TEXT = "_0_"
EMPTY_TEXT = "1"
RESERVED_LETTERS = frozenset("pq")
_PLAIN_LETTER = re.compile(r"^[a-or-z]$")
_BRACKET = re.compile(r"^([pq])(\d+)$")
_QUOTED = re.compile(r"^'(.)'$")


class TokenKind(Enum):
    """Kinds of tokens in words over X and the bracket alphabet"""
    LETTER = "letter"
    OPEN = "open"
    CLOSE = "close"
    ZERO = "zero"


@dataclass(frozen=True)
class Token:
    """
    A letter of X, an opening bracket p_i, a closing bracket q_i, or the zero marker
    """
    kind: TokenKind
    letter: str = ""
    index: int = -1

    def is_bracket(self) -> bool:
        return self.kind in (TokenKind.OPEN, TokenKind.CLOSE)

    def sort_key(self) -> Tuple[int, str, int]:
        order = {TokenKind.CLOSE: 0, TokenKind.LETTER: 1, TokenKind.OPEN: 2, TokenKind.ZERO: 3}
        return (order[self.kind], self.letter, self.index)

    def __str__(self) -> str:
        if self.kind is TokenKind.LETTER:
            if _PLAIN_LETTER.match(self.letter):
                return self.letter
            return f"'{self.letter}'"
        if self.kind is TokenKind.OPEN:
            return f"p{self.index}"
        if self.kind is TokenKind.CLOSE:
            return f"q{self.index}"
        return ZERO_TEXT

    def __repr__(self) -> str:
        return f"Token({self})"


def letter(symbol: str) -> Token:
    """Letter token; any single character is allowed"""
    if len(symbol) != 1:
        raise RewriteError(f"Letters are single characters, got {symbol!r}")
    return Token(TokenKind.LETTER, letter=symbol)


def open_bracket(index: int) -> Token:
    if index < 0:
        raise RewriteError(f"Negative bracket index {index}")
    return Token(TokenKind.OPEN, index=index)


def close_bracket(index: int) -> Token:
    if index < 0:
        raise RewriteError(f"Negative bracket index {index}")
    return Token(TokenKind.CLOSE, index=index)


ZERO_TOKEN = Token(TokenKind.ZERO)


def check_indices(tokens: Iterable[Token], m: int) -> None:
    """Raise BracketIndexError if a bracket index is not below m"""
    for token in tokens:
        if token.is_bracket() and token.index >= m:
            raise BracketIndexError(token.index, m)


def parse_token(text: str, m: int = None, aliases: bool = False) -> Token:
    """
    Parse one whitespace-free token of the word format

    Args:
        text (str): token text such as a, p1, q0, '(' or _0_
        m (int): optional bracket count to check indices against
        aliases (bool): accept b, p, d, q for p0, p1, q0, q1 (m=2 only)

    Returns:
        Token: the parsed token
    """
    if text == ZERO_TEXT:
        return ZERO_TOKEN
    if aliases:
        alias = {'b': open_bracket(0), 'p': open_bracket(1),
                 'd': close_bracket(0), 'q': close_bracket(1)}.get(text)
        if alias is not None:
            return alias
    match = _BRACKET.match(text)
    if match:
        index = int(match.group(2))
        if m is not None and index >= m:
            raise BracketIndexError(index, m)
        return open_bracket(index) if match.group(1) == 'p' else close_bracket(index)
    if _PLAIN_LETTER.match(text):
        return letter(text)
    match = _QUOTED.match(text)
    if match:
        return letter(match.group(1))
    raise RewriteError(f"Unknown token {text!r}")


def parse_word(text: str, m: int = None, aliases: bool = False) -> List[Token]:
    """
    Parse a whitespace-separated word; '1' or an empty line is the empty word

    Args:
        text (str): word text, e.g. "p0 a p1 q1 b q0"
        m (int): optional bracket count
        aliases (bool): accept the two-pair aliases

    Returns:
        List[Token]: the tokens
    """
    parts = text.split()
    if parts == [EMPTY_TEXT]:
        return []
    return [parse_token(part, m, aliases) for part in parts]


def letters_of(text: str) -> List[Token]:
    """Treat every character of a plain string as a letter"""
    return [letter(ch) for ch in text]


@dataclass(frozen=True)
class NormalFormWord:
    """
    Element of Q*X*P* or the distinguished zero

    closes and opens hold bracket indices, letters holds letter symbols.
    """
    closes: Tuple[int, ...] = ()
    letters: Tuple[str, ...] = ()
    opens: Tuple[int, ...] = ()
    is_zero: bool = False

    @classmethod
    def from_tokens(cls, tokens: Sequence[Token]) -> 'NormalFormWord':
        """
        Read an irreducible token sequence

        Raises:
            RewriteError: if the sequence is not of the shape Q*X*P* or [0]
        """
        if len(tokens) == 1 and tokens[0].kind is TokenKind.ZERO:
            return ZERO_WORD
        closes: List[int] = []
        letters: List[str] = []
        opens: List[int] = []
        stage = 0
        for token in tokens:
            rank = {TokenKind.CLOSE: 0, TokenKind.LETTER: 1, TokenKind.OPEN: 2}.get(token.kind)
            if rank is None or rank < stage:
                raise RewriteError(f"Not a normal form: {' '.join(str(t) for t in tokens)}")
            stage = rank
            if rank == 0:
                closes.append(token.index)
            elif rank == 1:
                letters.append(token.letter)
            else:
                opens.append(token.index)
        return cls(tuple(closes), tuple(letters), tuple(opens))

    def tokens(self) -> Tuple[Token, ...]:
        """Flatten to a token sequence"""
        if self.is_zero:
            return (ZERO_TOKEN,)
        return (tuple(close_bracket(i) for i in self.closes)
                + tuple(letter(x) for x in self.letters)
                + tuple(open_bracket(i) for i in self.opens))

    def is_bracket_free(self) -> bool:
        return not self.is_zero and not self.closes and not self.opens

    def bracket_part(self) -> 'NormalFormWord':
        if self.is_zero:
            return self
        return NormalFormWord(self.closes, (), self.opens)

    def sort_key(self) -> Tuple[str, ...]:
        return tuple(str(t) for t in self.tokens())

    def __len__(self) -> int:
        if self.is_zero:
            return 1
        return len(self.closes) + len(self.letters) + len(self.opens)

    def __str__(self) -> str:
        if self.is_zero:
            return ZERO_TEXT
        if len(self) == 0:
            return EMPTY_TEXT
        return " ".join(str(t) for t in self.tokens())


ZERO_WORD = NormalFormWord(is_zero=True)
EMPTY_WORD = NormalFormWord()
