"""
expressions.py - Regular expressions over letters and brackets (tensor expressions)

Nodes are immutable and hash-consed by structure. Large expressions produced by
matrix star share subterms, so every traversal here works on the node DAG by
identity instead of unfolding the tree.
"""

from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple
import logging
import weakref

from src.rewriting.tokens import Token, TokenKind, open_bracket, close_bracket

# Configure logging
logger = logging.getLogger(__name__)


class ExprKind(Enum):
    ZERO = 0
    ONE = 1
    ATOM = 2
    SUM = 3
    PRODUCT = 4
    STAR = 5


class TensorExpr:
    """
    Expression node: 0, 1, a token, a sum, a product or a star

    Build nodes with zero(), one(), atom(), plus(), times() and star(); they apply
    the light canonicalization (0/1 absorption, flattening, idempotent sums).
    """
    __slots__ = ("kind", "token", "children", "_hash", "__weakref__")

    def __init__(self, kind: ExprKind, token: Optional[Token] = None,
                 children: Tuple['TensorExpr', ...] = ()):
        self.kind = kind
        self.token = token
        self.children = children
        self._hash = hash((kind, token, tuple(c._hash for c in children)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, TensorExpr) or self._hash != other._hash:
            return False
        return self.kind == other.kind and self.token == other.token and self.children == other.children

    def __add__(self, other: 'TensorExpr') -> 'TensorExpr':
        return plus(self, other)

    def __mul__(self, other: 'TensorExpr') -> 'TensorExpr':
        return times(self, other)

    def star(self) -> 'TensorExpr':
        return star(self)

    def is_zero(self) -> bool:
        return self.kind is ExprKind.ZERO

    def is_one(self) -> bool:
        return self.kind is ExprKind.ONE

    def __repr__(self) -> str:
        from src.kleene.parser import regex_print
        return f"TensorExpr({regex_print(self)})"


# live nodes by (kind, token, children); children are interned, so equality is identity
_NODES: "weakref.WeakValueDictionary[Tuple[Any, ...], TensorExpr]" = weakref.WeakValueDictionary()


def _node(kind: ExprKind, token: Optional[Token] = None,
          children: Tuple[TensorExpr, ...] = ()) -> TensorExpr:
    key = (kind, token, children)
    node = _NODES.get(key)
    if node is None:
        node = TensorExpr(kind, token, children)
        _NODES[key] = node
    return node


ZERO = _node(ExprKind.ZERO)
ONE = _node(ExprKind.ONE)


def zero() -> TensorExpr:
    return ZERO


def one() -> TensorExpr:
    return ONE


def atom(token: Token) -> TensorExpr:
    """Leaf for a letter or bracket token; the zero token maps to 0"""
    if token.kind is TokenKind.ZERO:
        return ZERO
    return _node(ExprKind.ATOM, token=token)


def plus(*terms: TensorExpr) -> TensorExpr:
    """Sum with flattening, 0 removal and duplicate removal (first occurrence kept)"""
    flat: List[TensorExpr] = []
    seen = set()
    for term in terms:
        parts = term.children if term.kind is ExprKind.SUM else (term,)
        for part in parts:
            if part.kind is ExprKind.ZERO or part in seen:
                continue
            seen.add(part)
            flat.append(part)
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return _node(ExprKind.SUM, children=tuple(flat))


def times(*factors: TensorExpr) -> TensorExpr:
    """Product with flattening, 1 removal and 0 absorption"""
    flat: List[TensorExpr] = []
    for factor in factors:
        if factor.kind is ExprKind.ZERO:
            return ZERO
        if factor.kind is ExprKind.ONE:
            continue
        if factor.kind is ExprKind.PRODUCT:
            flat.extend(factor.children)
        else:
            flat.append(factor)
    if not flat:
        return ONE
    if len(flat) == 1:
        return flat[0]
    return _node(ExprKind.PRODUCT, children=tuple(flat))


def star(body: TensorExpr) -> TensorExpr:
    """Star with 0* = 1* = 1, (e*)* = e* and (1 + e)* = e*"""
    if body.kind in (ExprKind.ZERO, ExprKind.ONE):
        return ONE
    if body.kind is ExprKind.STAR:
        return body
    if body.kind is ExprKind.SUM and ONE in body.children:
        return star(plus(*[c for c in body.children if c.kind is not ExprKind.ONE]))
    return _node(ExprKind.STAR, children=(body,))


def sum_of(terms: Iterable[TensorExpr]) -> TensorExpr:
    return plus(*list(terms))


def word_expr(tokens: Sequence[Token]) -> TensorExpr:
    """Product of atoms spelling a word"""
    return times(*[atom(t) for t in tokens])


def postorder(root: TensorExpr) -> List[TensorExpr]:
    """
    Distinct nodes of the DAG, children before parents

    Iterative, so deep expressions do not hit the recursion limit.
    """
    order: List[TensorExpr] = []
    visited = set()
    stack: List[Tuple[TensorExpr, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        for child in reversed(node.children):
            if id(child) not in visited:
                stack.append((child, False))
    return order


def substitute(root: TensorExpr, leaf_map: Callable[[Token], TensorExpr]) -> TensorExpr:
    """
    Replace every atom by leaf_map(token), rebuilding with canonicalization

    Args:
        root (TensorExpr): expression
        leaf_map (Callable): replacement for each token

    Returns:
        TensorExpr: the substituted expression
    """
    image: Dict[int, TensorExpr] = {}
    for node in postorder(root):
        if node.kind is ExprKind.ATOM:
            result = leaf_map(node.token)
        elif node.kind is ExprKind.SUM:
            result = plus(*[image[id(c)] for c in node.children])
        elif node.kind is ExprKind.PRODUCT:
            result = times(*[image[id(c)] for c in node.children])
        elif node.kind is ExprKind.STAR:
            result = star(image[id(node.children[0])])
        else:
            result = node
        image[id(node)] = result
    return image[id(root)]


def tokens_of(root: TensorExpr) -> List[Token]:
    """Distinct tokens occurring in the expression, in first-visit order"""
    seen: Dict[Token, None] = {}
    for node in postorder(root):
        if node.kind is ExprKind.ATOM:
            seen.setdefault(node.token, None)
    return list(seen)


def max_bracket_index(root: TensorExpr) -> int:
    """Largest bracket index used, or -1 when bracket-free"""
    indices = [t.index for t in tokens_of(root) if t.is_bracket()]
    return max(indices) if indices else -1


def is_bracket_free(root: TensorExpr) -> bool:
    return all(not t.is_bracket() for t in tokens_of(root))


def node_count(root: TensorExpr) -> int:
    """Number of distinct DAG nodes"""
    return len(postorder(root))


def pi_expr() -> TensorExpr:
    """The splice q0 p0"""
    return times(atom(close_bracket(0)), atom(open_bracket(0)))


def completeness_sum(m: int) -> TensorExpr:
    """The sum of q_i p_i over i < m"""
    return plus(*[times(atom(close_bracket(i)), atom(open_bracket(i))) for i in range(m)])
