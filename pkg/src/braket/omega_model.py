"""
omega_model.py - The stack model of brackets, truncated to indices below T

A stack over m symbols is coded as the index k; pushing i gives m*k + i and
popping is the converse. The open bracket p_i relates k to m*k + i, the close
bracket q_i relates m*k + i back to k. Pushes whose index reaches T are dropped,
so identities are exact only on the overflow-free domain.
"""

from typing import Dict, FrozenSet, List, Optional
import logging

from src.braket.relations import IndexRelation, RelationAlgebra
from src.kleene.expressions import TensorExpr, ExprKind, postorder
from src.rewriting.tokens import Token, TokenKind
from src.utils.config import default_config
from src.utils.decorators import performance_monitor
from src.utils.errors import ModelError

# Configure logging
logger = logging.getLogger(__name__)


def overflow_free_domain(m: int, trunc: int) -> FrozenSet[int]:
    """Indices k whose every push m*k + i stays below trunc"""
    return frozenset(k for k in range(trunc) if m * k + m - 1 < trunc)


class OmegaModel:
    """
    Interpretation of bracket expressions as index relations
    """

    def __init__(self, m: int, trunc: int):
        """
        Args:
            m (int): bracket count
            trunc (int): truncation T, at least m
        """
        if m < 1:
            raise ModelError(f"Bracket count must be positive, got {m}")
        if trunc < m:
            raise ModelError(f"Truncation T={trunc} must be at least m={m}", {'m': m, 'trunc': trunc})
        self.m = m
        self.trunc = trunc
        self.algebra = RelationAlgebra(trunc)
        self.evaluation_history: List[Dict[str, int]] = []

    def domain(self) -> FrozenSet[int]:
        return overflow_free_domain(self.m, self.trunc)

    def open(self, index: int) -> IndexRelation:
        self._check_index(index)
        return IndexRelation(self.trunc, frozenset(
            (k, self.m * k + index) for k in range(self.trunc) if self.m * k + index < self.trunc))

    def close(self, index: int) -> IndexRelation:
        return self.open(index).converse()

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.m:
            raise ModelError(f"Bracket index {index} out of range for m={self.m}",
                             {'index': index, 'm': self.m})

    def token(self, token: Token) -> IndexRelation:
        if token.kind is TokenKind.OPEN:
            return self.open(token.index)
        if token.kind is TokenKind.CLOSE:
            return self.close(token.index)
        if token.kind is TokenKind.ZERO:
            return self.algebra.zero
        raise ModelError(f"Letter {token} has no meaning in the bracket model", {'token': str(token)})

    @performance_monitor
    def evaluate(self, expr: TensorExpr) -> IndexRelation:
        """
        Relation denoted by a bracket expression

        Args:
            expr (TensorExpr): expression over brackets only

        Returns:
            IndexRelation: the interpretation

        Raises:
            ModelError: on a letter or an out-of-range bracket
        """
        values: Dict[int, IndexRelation] = {}
        for node in postorder(expr):
            if node.kind is ExprKind.ZERO:
                value = self.algebra.zero
            elif node.kind is ExprKind.ONE:
                value = self.algebra.one
            elif node.kind is ExprKind.ATOM:
                value = self.token(node.token)
            elif node.kind is ExprKind.SUM:
                value = self.algebra.sum(values[id(c)] for c in node.children)
            elif node.kind is ExprKind.PRODUCT:
                value = self.algebra.product(values[id(c)] for c in node.children)
            else:
                value = self.algebra.star(values[id(node.children[0])])
            values[id(node)] = value
        result = values[id(expr)]
        self.evaluation_history.append({'nodes': len(values), 'pairs': len(result.pairs)})
        return result


def omega_model_eval(expr: TensorExpr, m: Optional[int] = None, trunc: Optional[int] = None) -> IndexRelation:
    """
    Evaluate a bracket word or sum of words in the truncated stack model

    Args:
        expr (TensorExpr): bracket expression
        m (int): bracket count
        trunc (int): truncation T >= m

    Returns:
        IndexRelation: relation on {0, ..., T-1}
    """
    m = default_config.m if m is None else m
    trunc = default_config.trunc if trunc is None else trunc
    try:
        relation = OmegaModel(m, trunc).evaluate(expr)
        logger.info(f"Model evaluation at m={m}, T={trunc}: {len(relation.pairs)} pairs")
        return relation
    except Exception as e:
        logger.error(f"Error evaluating in the bracket model: {str(e)}")
        raise
