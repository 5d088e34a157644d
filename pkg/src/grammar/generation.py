"""
generation.py - Bounded language generation and a brute-force derivation oracle
"""

from collections import defaultdict
from itertools import product as cartesian
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union
import logging

from src.grammar.cfg import Grammar
from src.grammar.normalize import normalize, accepts_empty
from src.utils.config import default_config
from src.utils.errors import GenerationCapExceeded

# Configure logging
logger = logging.getLogger(__name__)

Word = Tuple[str, ...]


def _compositions(total: int, parts: int):
    """Ordered splits of total into parts positive summands"""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def cfg_enumerate(grammar: Grammar, maxlen: int, cap: Optional[int] = None) -> FrozenSet[Word]:
    """
    All words of L(grammar) of length at most maxlen

    Works in length layers on the normalized grammar, where every body either is
    one terminal or consists of at least two nonterminals each deriving a
    non-empty word, so layer k only needs the layers below it.

    Args:
        grammar (Grammar): the grammar
        maxlen (int): length bound >= 0
        cap (int): maximum number of words held across all layers

    Returns:
        FrozenSet[Word]: the words as terminal tuples

    Raises:
        GenerationCapExceeded: if more than cap words are generated
    """
    cap = default_config.word_cap if cap is None else cap
    normalized = normalize(grammar)
    heads = normalized.nonterminals
    layers: Dict[str, Dict[int, Set[Word]]] = defaultdict(lambda: defaultdict(set))
    held = 0

    for length in range(1, maxlen + 1):
        for p in normalized.productions:
            if len(p.body) == 1 and p.body[0] not in heads:
                fresh = {(p.body[0],)} if length == 1 else set()
            elif 2 <= len(p.body) <= length:
                fresh = set()
                for split in _compositions(length, len(p.body)):
                    pieces = [layers[s][k] for s, k in zip(p.body, split)]
                    if all(pieces):
                        for combo in cartesian(*pieces):
                            fresh.add(tuple(t for piece in combo for t in piece))
            else:
                continue
            target = layers[p.head][length]
            before = len(target)
            target |= fresh
            held += len(target) - before
            if held > cap:
                logger.error(f"Generation cap {cap} exceeded at length {length}")
                raise GenerationCapExceeded(
                    f"Generation exceeded the cap of {cap} words",
                    {'cap': cap, 'maxlen': maxlen})

    words: Set[Word] = set()
    if accepts_empty(normalized):
        words.add(())
    for length in range(1, maxlen + 1):
        words |= layers[normalized.start][length]
    logger.info(f"Generated {len(words)} words up to length {maxlen}")
    return frozenset(words)


def word_strings(words: FrozenSet[Word]) -> List[str]:
    """Sorted concatenations, for one-character terminals"""
    return sorted(("".join(w) for w in words), key=lambda s: (len(s), s))


def derives(grammar: Grammar, word: Union[str, Sequence[str]], max_depth: int = 12) -> bool:
    """
    Brute-force leftmost derivation search on the grammar as written

    Args:
        grammar (Grammar): the grammar, not normalized
        word (str | Sequence[str]): target word
        max_depth (int): maximum number of derivation steps

    Returns:
        bool: True if a derivation of at most max_depth steps exists
    """
    target = tuple(word)
    groups = grammar.by_head()
    heads = grammar.nonterminals
    seen: Dict[Tuple[str, ...], int] = {}

    def search(form: Tuple[str, ...], budget: int) -> bool:
        prefix = 0
        while prefix < len(form) and form[prefix] not in heads:
            prefix += 1
        if form[:prefix] != target[:prefix] or prefix > len(target):
            return False
        if prefix == len(form):
            return form == target
        terminals = sum(1 for s in form if s not in heads)
        if terminals > len(target) or budget == 0:
            return False
        if seen.get(form, -1) >= budget:
            return False
        seen[form] = budget
        head = form[prefix]
        for body in groups.get(head, ()):
            if search(form[:prefix] + body + form[prefix + 1:], budget - 1):
                return True
        return False

    return search((grammar.start,), max_depth)
