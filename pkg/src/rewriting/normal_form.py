"""
normal_form.py - Normal forms of words under the polycyclic bracket rules

The rules, for letters x and brackets p_i, q_j:

    u p_i x v  -> u x p_i v
    u x q_i v  -> u q_i x v
    u p_i q_i v -> u v
    u p_i q_j v -> 0          (i != j)
    u 0 v      -> 0          (uv non-empty)
"""

from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple
import logging

from src.rewriting.tokens import (
    Token, TokenKind, NormalFormWord, ZERO_TOKEN, ZERO_WORD
)

# Configure logging
logger = logging.getLogger(__name__)


def nf_reduce(word: Iterable[Token]) -> NormalFormWord:
    """
    Reduce a word to its normal form in one left-to-right pass

    Letters commute with brackets, so the letters are collected in order while
    the brackets are reduced on a pushdown of pending opening brackets.

    Args:
        word (Iterable[Token]): the tokens

    Returns:
        NormalFormWord: the unique normal form
    """
    closes: List[int] = []
    letters: List[str] = []
    pending: List[int] = []

    for token in word:
        if token.kind is TokenKind.LETTER:
            letters.append(token.letter)
        elif token.kind is TokenKind.OPEN:
            pending.append(token.index)
        elif token.kind is TokenKind.CLOSE:
            if pending:
                if pending.pop() != token.index:
                    return ZERO_WORD
            else:
                closes.append(token.index)
        else:
            return ZERO_WORD

    return NormalFormWord(tuple(closes), tuple(letters), tuple(pending))


def nf_mul(u: NormalFormWord, v: NormalFormWord) -> NormalFormWord:
    """
    Product of two normal forms, nf(uv)

    Args:
        u (NormalFormWord): left factor
        v (NormalFormWord): right factor

    Returns:
        NormalFormWord: normal form of the concatenation
    """
    if u.is_zero or v.is_zero:
        return ZERO_WORD

    opens = u.opens
    closes = v.closes
    matched = min(len(opens), len(closes))
    for t in range(matched):
        if opens[len(opens) - 1 - t] != closes[t]:
            return ZERO_WORD

    return NormalFormWord(
        u.closes + closes[matched:],
        u.letters + v.letters,
        opens[:len(opens) - matched] + v.opens
    )


def nf_word(tokens: Sequence[Token]) -> Tuple[Token, ...]:
    """Normal form flattened back to tokens"""
    return nf_reduce(tokens).tokens()


def rewrite_successors(word: Tuple[Token, ...]) -> Set[Tuple[Token, ...]]:
    """
    All words reachable from word by one application of one rule at one position

    Args:
        word (Tuple[Token, ...]): current word

    Returns:
        Set of successor words; empty iff word is irreducible
    """
    successors: Set[Tuple[Token, ...]] = set()

    if ZERO_TOKEN in word and len(word) > 1:
        successors.add((ZERO_TOKEN,))

    for k in range(len(word) - 1):
        left, right = word[k], word[k + 1]
        if left.kind is TokenKind.OPEN and right.kind is TokenKind.LETTER:
            successors.add(word[:k] + (right, left) + word[k + 2:])
        elif left.kind is TokenKind.LETTER and right.kind is TokenKind.CLOSE:
            successors.add(word[:k] + (right, left) + word[k + 2:])
        elif left.kind is TokenKind.OPEN and right.kind is TokenKind.CLOSE:
            if left.index == right.index:
                successors.add(word[:k] + word[k + 2:])
            else:
                successors.add((ZERO_TOKEN,))

    return successors


def all_normal_forms(word: Sequence[Token]) -> FrozenSet[NormalFormWord]:
    """
    Irreducible words reached by every maximal rewrite sequence from word

    Explores all redex choices; a confluent system yields exactly one result.

    Args:
        word (Sequence[Token]): start word

    Returns:
        FrozenSet[NormalFormWord]: the set of terminal normal forms
    """
    memo: Dict[Tuple[Token, ...], FrozenSet[NormalFormWord]] = {}
    return _terminal_forms(tuple(word), memo)


def _terminal_forms(word: Tuple[Token, ...],
                    memo: Dict[Tuple[Token, ...], FrozenSet[NormalFormWord]]) -> FrozenSet[NormalFormWord]:
    if word in memo:
        return memo[word]
    successors = rewrite_successors(word)
    if not successors:
        result = frozenset([NormalFormWord.from_tokens(word)])
    else:
        collected: Set[NormalFormWord] = set()
        for successor in successors:
            collected |= _terminal_forms(successor, memo)
        result = frozenset(collected)
    memo[word] = result
    return result
