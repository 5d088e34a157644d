"""
recoding.py - Recoding m bracket pairs into the two pairs p0, p1 / q0, q1

Writing b, p, d, q for p0, p1, q0, q1:

    polycyclic mode:  p_i -> b p^(i+1)        q_i -> q^(i+1) d
    braket mode:      p_i -> b p^i (i < m-1)  p_(m-1) -> p^(m-1)
                      q_i -> q^i d (i < m-1)  q_(m-1) -> q^(m-1)
"""

from enum import Enum
from typing import Iterable, List, Tuple
import logging

from src.rewriting.tokens import Token, TokenKind, open_bracket, close_bracket, check_indices
from src.utils.errors import RewriteError

# Configure logging
logger = logging.getLogger(__name__)

B, P = open_bracket(0), open_bracket(1)
D, Q = close_bracket(0), close_bracket(1)


class RecodingMode(Enum):
    POLYCYCLIC = "polycyclic"
    BRAKET = "braket"


def encode_token(token: Token, m: int, mode: RecodingMode = RecodingMode.POLYCYCLIC) -> Tuple[Token, ...]:
    """
    Image of a single token; letters and zero pass through

    Args:
        token (Token): token over m bracket pairs
        m (int): bracket count, at least 2
        mode (RecodingMode): which recoding to apply

    Returns:
        Tuple[Token, ...]: the encoded tokens over two pairs
    """
    if m < 2:
        raise RewriteError(f"Recoding needs m >= 2, got {m}")
    if not token.is_bracket():
        return (token,)
    if token.index >= m:
        raise RewriteError(f"Bracket {token} out of range for m={m}")

    i = token.index
    if mode is RecodingMode.POLYCYCLIC:
        if token.kind is TokenKind.OPEN:
            return (B,) + (P,) * (i + 1)
        return (Q,) * (i + 1) + (D,)

    if m == 2:
        return (token,)
    if token.kind is TokenKind.OPEN:
        return (P,) * i if i == m - 1 else (B,) + (P,) * i
    return (Q,) * i if i == m - 1 else (Q,) * i + (D,)


def encode_brackets(word: Iterable[Token], m: int,
                    mode: RecodingMode = RecodingMode.POLYCYCLIC) -> List[Token]:
    """
    Homomorphic recoding of a word over m bracket pairs into two pairs

    Args:
        word (Iterable[Token]): tokens over X and m bracket pairs
        m (int): bracket count
        mode (RecodingMode): polycyclic or braket recoding

    Returns:
        List[Token]: the recoded word
    """
    word = list(word)
    check_indices(word, m)
    encoded: List[Token] = []
    for token in word:
        encoded.extend(encode_token(token, m, mode))
    return encoded
