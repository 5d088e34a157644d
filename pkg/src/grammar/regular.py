"""
regular.py - Productions for bracket-free regular expressions
"""

from typing import Dict, List, Optional, Set, Tuple
import logging

from src.grammar.cfg import Production
from src.grammar.normalize import fresh_symbol
from src.kleene.expressions import TensorExpr, ExprKind, postorder
from src.rewriting.tokens import TokenKind
from src.utils.errors import GrammarError

# Configure logging
logger = logging.getLogger(__name__)

Body = Tuple[str, ...]


class RegularProductions:
    """
    Translates bracket-free expressions into productions over fresh nonterminals

    Each DAG node gets at most one nonterminal, shared by every caller of the
    same builder.
    """

    def __init__(self, taken: Set[str], prefix: str = "R"):
        self.taken = taken
        self.prefix = prefix
        self.productions: List[Production] = []
        self._bodies: Dict[int, Optional[Body]] = {}
        self._keep: List[TensorExpr] = []

    def _fresh(self) -> str:
        return fresh_symbol(f"{self.prefix}{len(self._bodies)}", self.taken)

    def body_for(self, expr: TensorExpr) -> Optional[Body]:
        """
        A body deriving exactly the language of expr, or None for the empty language

        Raises:
            GrammarError: if expr contains a bracket
        """
        for node in postorder(expr):
            if id(node) in self._bodies:
                continue
            self._keep.append(node)
            self._bodies[id(node)] = self._translate(node)
        return self._bodies[id(expr)]

    def _translate(self, node: TensorExpr) -> Optional[Body]:
        if node.kind is ExprKind.ZERO:
            return None
        if node.kind is ExprKind.ONE:
            return ()
        if node.kind is ExprKind.ATOM:
            if node.token.kind is not TokenKind.LETTER:
                raise GrammarError(f"Bracket {node.token} in a letter expression")
            return (node.token.letter,)

        children = [self._bodies[id(c)] for c in node.children]
        if node.kind is ExprKind.PRODUCT:
            if any(c is None for c in children):
                return None
            return tuple(s for c in children for s in c)

        head = self._fresh()
        if node.kind is ExprKind.SUM:
            live = [c for c in children if c is not None]
            if not live:
                return None
            self.productions.extend(Production(head, c) for c in live)
        else:
            self.productions.append(Production(head, ()))
            if children[0] is not None:
                self.productions.append(Production(head, children[0] + (head,)))
        return (head,)
