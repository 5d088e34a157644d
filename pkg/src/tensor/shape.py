"""
shape.py - Syntactic shape checks: the outer p0.r.q0 frame and the splice side condition
"""

from typing import Optional
import logging

from src.kleene.expressions import TensorExpr, ExprKind, times, postorder
from src.rewriting.tokens import TokenKind
from src.utils.errors import ShapeViolationError

# Configure logging
logger = logging.getLogger(__name__)


def _is_bracket_atom(node: TensorExpr, kind: TokenKind, index: int) -> bool:
    return (node.kind is ExprKind.ATOM and node.token.kind is kind
            and node.token.index == index)


def is_outer_open(node: TensorExpr) -> bool:
    return _is_bracket_atom(node, TokenKind.OPEN, 0)


def is_outer_close(node: TensorExpr) -> bool:
    return _is_bracket_atom(node, TokenKind.CLOSE, 0)


def outer_body(expr: TensorExpr) -> TensorExpr:
    """
    The r of an expression written p0.r.q0

    Raises:
        ShapeViolationError: if expr is not a product starting with p0 and ending with q0
    """
    children = expr.children if expr.kind is ExprKind.PRODUCT else ()
    if len(children) < 2 or not is_outer_open(children[0]) or not is_outer_close(children[-1]):
        raise ShapeViolationError("Expression must have the form p0 r q0",
                                  {'kind': expr.kind.name})
    return times(*children[1:-1])


def splice_violation(body: TensorExpr) -> Optional[str]:
    """
    Describe the first occurrence of p0 or q0 outside an adjacent q0 p0 pair

    Returns:
        Optional[str]: None when the side condition holds
    """
    if is_outer_open(body) or is_outer_close(body):
        return f"bare {body.token}"
    for node in postorder(body):
        children = node.children
        paired = set()
        if node.kind is ExprKind.PRODUCT:
            for k in range(len(children) - 1):
                if is_outer_close(children[k]) and is_outer_open(children[k + 1]):
                    paired.update((k, k + 1))
        for k, child in enumerate(children):
            if (is_outer_open(child) or is_outer_close(child)) and k not in paired:
                return f"{child.token} outside a q0 p0 pair"
    return None


def check_splice_condition(body: TensorExpr) -> None:
    """Raise ShapeViolationError if body uses p0 or q0 other than as q0 p0"""
    problem = splice_violation(body)
    if problem is not None:
        logger.error(f"Side condition violated: {problem}")
        raise ShapeViolationError(f"Side condition violated: {problem}", {'problem': problem})


def is_splice_pair(first: TensorExpr, second: TensorExpr) -> bool:
    return is_outer_close(first) and is_outer_open(second)
