"""
enumeration.py - Bounded enumeration of the normal-form image of a tensor expression

The image at bound L is {nf(w) : w in Lang(e), |w| <= L} without the zero.

The image is computed by a breadth-first walk of the position automaton that
carries the normal form of the prefix read so far instead of the prefix, so
the frontier is deduplicated on (position, normal form). Expressions whose
unfolding exceeds POSITION_LIMIT atoms (typically large matrix-star entries)
are evaluated on their DAG instead: each node once, to a table mapping a
normal form to the length of its shortest source word. Both give the same
image with the same shortest lengths.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple
import logging

from src.kleene.expressions import TensorExpr, ExprKind, postorder
from src.kleene.positions import PositionAutomaton, position_count
from src.rewriting.tokens import NormalFormWord, EMPTY_WORD
from src.rewriting.normal_form import nf_mul, nf_reduce
from src.utils.config import default_config
from src.utils.decorators import performance_monitor
from src.utils.errors import EnumerationOverflowError

# Configure logging
logger = logging.getLogger(__name__)

LengthTable = Dict[NormalFormWord, int]

POSITION_LIMIT = 1000


@dataclass(frozen=True)
class NfImage:
    """
    Finite set of normal forms whose sources fit the bound
    """
    bound: int
    words: FrozenSet[NormalFormWord]
    lengths: Dict[NormalFormWord, int] = field(default_factory=dict, compare=False, hash=False)

    def __contains__(self, word: NormalFormWord) -> bool:
        return word in self.words

    def __iter__(self) -> Iterator[NormalFormWord]:
        return iter(self.sorted_words())

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> List[NormalFormWord]:
        """Lexicographic order on the printed tokens"""
        return sorted(self.words, key=lambda w: w.sort_key())

    def lines(self) -> List[str]:
        return [str(w) for w in self.sorted_words()]

    def is_bracket_free(self) -> bool:
        return all(w.is_bracket_free() for w in self.words)

    def restricted(self, max_length: int) -> FrozenSet[NormalFormWord]:
        """Members of normal-form length at most max_length"""
        return frozenset(w for w in self.words if len(w) <= max_length)


def _merge(target: LengthTable, word: NormalFormWord, length: int) -> bool:
    if word.is_zero:
        return False
    known = target.get(word)
    if known is None or length < known:
        target[word] = length
        return True
    return False


def _product(left: LengthTable, right: LengthTable, bound: int) -> LengthTable:
    result: LengthTable = {}
    for u, lu in left.items():
        for v, lv in right.items():
            if lu + lv <= bound:
                _merge(result, nf_mul(u, v), lu + lv)
    return result


def _closure(body: LengthTable, bound: int) -> LengthTable:
    """Least table containing the empty word and closed under right product with body"""
    result: LengthTable = {EMPTY_WORD: 0}
    frontier = [EMPTY_WORD]
    steps = [(v, lv) for v, lv in body.items() if lv > 0 or v != EMPTY_WORD]
    while frontier:
        u = frontier.pop()
        lu = result[u]
        for v, lv in steps:
            if lu + lv > bound:
                continue
            w = nf_mul(u, v)
            if _merge(result, w, lu + lv):
                frontier.append(w)
    return result


def node_tables(expr: TensorExpr, bound: int, word_cap: int) -> Dict[int, LengthTable]:
    """
    Shortest-source tables of every DAG node, keyed by node identity

    Raises:
        EnumerationOverflowError: if a node holds more than word_cap normal forms
    """
    tables: Dict[int, LengthTable] = {}
    for node in postorder(expr):
        if node.kind is ExprKind.ZERO:
            table: LengthTable = {}
        elif node.kind is ExprKind.ONE:
            table = {EMPTY_WORD: 0}
        elif node.kind is ExprKind.ATOM:
            table = {}
            if bound >= 1:
                _merge(table, nf_reduce([node.token]), 1)
        elif node.kind is ExprKind.SUM:
            table = {}
            for child in node.children:
                for word, length in tables[id(child)].items():
                    _merge(table, word, length)
        elif node.kind is ExprKind.PRODUCT:
            table = tables[id(node.children[0])]
            for child in node.children[1:]:
                table = _product(table, tables[id(child)], bound)
                if not table:
                    break
        else:
            table = _closure(tables[id(node.children[0])], bound)

        if len(table) > word_cap:
            raise EnumerationOverflowError(
                f"Enumeration exceeded the word cap of {word_cap}",
                {'word_cap': word_cap, 'bound': bound, 'words': len(table)})
        tables[id(node)] = table
    return tables


def position_walk(expr: TensorExpr, bound: int, word_cap: int) -> LengthTable:
    """
    Shortest-source table of the image, by layers of source length

    Raises:
        EnumerationOverflowError: if more than word_cap distinct normal forms are reached
    """
    automaton = PositionAutomaton.from_expression(expr)
    steps = [EMPTY_WORD] + [nf_reduce([token]) for token in automaton.labels[1:]]
    seen = {(0, EMPTY_WORD)}
    forms = {EMPTY_WORD}
    layer: List[Tuple[int, NormalFormWord]] = [(0, EMPTY_WORD)]
    image: LengthTable = {}
    for length in range(bound + 1):
        following: List[Tuple[int, NormalFormWord]] = []
        for state, word in layer:
            if state in automaton.accepting:
                _merge(image, word, length)
            if length == bound:
                continue
            for target in automaton.follow[state]:
                extended = nf_mul(word, steps[target])
                if extended.is_zero or (target, extended) in seen:
                    continue
                seen.add((target, extended))
                forms.add(extended)
                following.append((target, extended))
        if len(forms) > word_cap:
            raise EnumerationOverflowError(
                f"Enumeration exceeded the word cap of {word_cap}",
                {'word_cap': word_cap, 'bound': bound, 'words': len(forms)})
        layer = following
    return image


@performance_monitor
def enumerate_nf_image(expr: TensorExpr, bound: Optional[int] = None,
                       word_cap: Optional[int] = None) -> NfImage:
    """
    Normal forms of the words of Lang(expr) of length at most bound

    Args:
        expr (TensorExpr): the expression
        bound (int): source-length bound L_src >= 0
        word_cap (int): cap on the normal forms held at once

    Returns:
        NfImage: the bounded image, zero excluded
    """
    bound = default_config.bound if bound is None else bound
    word_cap = default_config.word_cap if word_cap is None else word_cap
    if bound < 0:
        raise ValueError(f"Source bound must be non-negative, got {bound}")

    try:
        if position_count(expr) <= POSITION_LIMIT:
            root = position_walk(expr, bound, word_cap)
        else:
            root = node_tables(expr, bound, word_cap)[id(expr)]
        logger.info(f"Enumerated {len(root)} normal forms at bound {bound}")
        return NfImage(bound=bound, words=frozenset(root), lengths=dict(root))
    except EnumerationOverflowError as e:
        logger.error(f"Enumeration overflow: {str(e)}")
        raise
