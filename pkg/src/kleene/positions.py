"""
positions.py - Position (Glushkov) automaton of a tensor expression

State 0 is the initial state; state k >= 1 is the k-th atom occurrence and is
entered by reading that atom's token.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Set, Tuple
import logging

from src.kleene.expressions import TensorExpr, ExprKind, postorder
from src.rewriting.tokens import Token

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PositionAutomaton:
    """
    labels[k] is the token read on entering state k (labels[0] is None)
    """
    labels: Tuple[Token, ...]
    follow: Tuple[FrozenSet[int], ...]
    accepting: FrozenSet[int]

    @property
    def state_count(self) -> int:
        return len(self.labels)

    @classmethod
    def from_expression(cls, expr: TensorExpr) -> 'PositionAutomaton':
        """
        Glushkov construction over the expression tree

        Shared subterms are expanded, one position per atom occurrence.

        Args:
            expr (TensorExpr): the expression

        Returns:
            PositionAutomaton: the position automaton
        """
        labels: List[Token] = [None]
        follow: Dict[int, Set[int]] = {0: set()}

        def visit(node: TensorExpr) -> Tuple[bool, Set[int], Set[int]]:
            if node.kind is ExprKind.ZERO:
                return False, set(), set()
            if node.kind is ExprKind.ONE:
                return True, set(), set()
            if node.kind is ExprKind.ATOM:
                position = len(labels)
                labels.append(node.token)
                follow[position] = set()
                return False, {position}, {position}
            if node.kind is ExprKind.SUM:
                nullable, first, last = False, set(), set()
                for child in node.children:
                    n, f, l = visit(child)
                    nullable = nullable or n
                    first |= f
                    last |= l
                return nullable, first, last
            if node.kind is ExprKind.PRODUCT:
                nullable, first, last = True, set(), set()
                for child in node.children:
                    n, f, l = visit(child)
                    for position in last:
                        follow[position] |= f
                    if nullable:
                        first |= f
                    last = (last | l) if n else set(l)
                    nullable = nullable and n
                return nullable, first, last
            n, f, l = visit(node.children[0])
            for position in l:
                follow[position] |= f
            return True, f, l

        nullable, first, last = visit(expr)
        follow[0] = set(first)
        accepting = set(last)
        if nullable:
            accepting.add(0)

        return cls(
            labels=tuple(labels),
            follow=tuple(frozenset(follow[k]) for k in range(len(labels))),
            accepting=frozenset(accepting)
        )

    def accepts(self, word: List[Token]) -> bool:
        """Plain language membership of a token word, without any rewriting"""
        current = {0}
        for token in word:
            current = {q for p in current for q in self.follow[p] if self.labels[q] == token}
            if not current:
                return False
        return bool(current & self.accepting)


def position_count(expr: TensorExpr) -> int:
    """Number of atom occurrences in the unfolded expression, without unfolding it"""
    counts: Dict[int, int] = {}
    for node in postorder(expr):
        if node.kind is ExprKind.ATOM:
            counts[id(node)] = 1
        else:
            counts[id(node)] = sum(counts[id(c)] for c in node.children)
    return counts[id(expr)]
