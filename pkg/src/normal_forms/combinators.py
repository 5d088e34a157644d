"""
combinators.py - Building first normal forms by induction on expressions

Leaves are the constants 0 and 1, letter atoms and single brackets. The
combinators assemble block matrices from their operands:

    plus:         U, V and N block-diagonal, S = (S1, S2), F = (F1, F2)
    concat:       N the least solution over the base [[N1, F1 S2], [0, N2]],
                  S = (S1, 0), F = (0, F2)
    plusclosure:  N the least solution over the base N1 + F1 S1
    star:         plus of the constant 1 with plusclosure

In the concat case the off-diagonal block of the result is the least alpha
with alpha >= N1 U1 alpha V2 N2 + N1 F1 S2 N2.
"""

from typing import FrozenSet, List, Optional, Sequence, Tuple
import logging

from src.grammar.cfg import Production
from src.kleene.expressions import (
    TensorExpr, ExprKind, ZERO, ONE, plus, tokens_of, is_bracket_free, max_bracket_index
)
from src.normal_forms.centralizer_matrix import CentralizerMatrix, Part
from src.normal_forms.normal_form import NormalForm, NormalFormKind
from src.rewriting.tokens import Token, TokenKind
from src.utils.config import ToolkitConfig, default_config
from src.utils.decorators import performance_monitor
from src.utils.errors import CombinatorError

# Configure logging
logger = logging.getLogger(__name__)

COMBINATORS = ('plus', 'concat', 'plusclosure', 'star')

LEFT, RIGHT = "l.", "r."


def _square(n: int, value) -> List[list]:
    return [[value] * n for _ in range(n)]


def _freeze(grid) -> tuple:
    return tuple(tuple(row) for row in grid)


def _letters(expr: TensorExpr) -> FrozenSet[str]:
    return frozenset(t.letter for t in tokens_of(expr) if t.kind is TokenKind.LETTER)


def _wrap(S, U, N: CentralizerMatrix, V, F, m: int, alphabet: Optional[FrozenSet[str]]) -> NormalForm:
    n = len(S)
    return NormalForm(NormalFormKind.FIRST, tuple(bool(x) for x in S), _freeze(U), N, _freeze(V),
                      _freeze(_square(n, False)), tuple(bool(x) for x in F), m, alphabet)


def _leaf(S: Sequence[int], F: Sequence[int], U, V, M: List[List[TensorExpr]], m: int,
          alphabet: Optional[FrozenSet[str]], style: Optional[str]) -> NormalForm:
    N = CentralizerMatrix.closure(U, M, V, style=style)
    return _wrap(S, U, N, V, F, m, alphabet)


def _identity(n: int) -> List[List[TensorExpr]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def constant_normal_form(value: TensorExpr, m: Optional[int] = None,
                         style: Optional[str] = None) -> NormalForm:
    """One-state normal form of 0 or 1: N = (1), S = (0) or (1), F = (1)"""
    if value.kind not in (ExprKind.ZERO, ExprKind.ONE):
        raise CombinatorError("Constant leaves are 0 and 1", {'kind': value.kind.name})
    m = default_config.m if m is None else m
    return _leaf([int(value.is_one())], [1], [[None]], [[None]], [[ONE]], m, frozenset(), style)


def atom_normal_form(value: TensorExpr, m: Optional[int] = None,
                     style: Optional[str] = None) -> NormalForm:
    """
    Two-state normal form of a bracket-free k: N = [[1, k], [0, 1]], U = V = 0

    Raises:
        CombinatorError: if k contains a bracket
    """
    if not is_bracket_free(value):
        raise CombinatorError("Atom leaves must be bracket-free")
    m = default_config.m if m is None else m
    M = [[ONE, value], [ZERO, ONE]]
    return _leaf([1, 0], [0, 1], _square(2, None), _square(2, None), M, m, _letters(value), style)


def bracket_normal_form(token: Token, m: Optional[int] = None,
                        style: Optional[str] = None) -> NormalForm:
    """Two-state normal form of one bracket, on the edge 0 -> 1 of U or V, with N = 1"""
    if not token.is_bracket():
        raise CombinatorError(f"{token} is not a bracket")
    m = max(default_config.m if m is None else m, token.index + 1)
    U, V = _square(2, None), _square(2, None)
    (U if token.kind is TokenKind.OPEN else V)[0][1] = token.index
    return _leaf([1, 0], [0, 1], U, V, _identity(2), m, frozenset(), style)


def _check_operands(lhs: NormalForm, rhs: Optional[NormalForm]) -> Optional[FrozenSet[str]]:
    """Validate operands; returns the alphabet of the result"""
    for operand in (lhs, rhs):
        if operand is not None and operand.kind is not NormalFormKind.FIRST:
            raise CombinatorError(f"Combinators need first normal forms, got {operand.kind.value}")
    if rhs is None:
        return lhs.alphabet
    if lhs.m != rhs.m:
        raise CombinatorError(f"Bracket count mismatch: m={lhs.m} vs m={rhs.m}",
                              {'left': lhs.m, 'right': rhs.m})
    if lhs.alphabet is None or rhs.alphabet is None:
        return None
    return lhs.alphabet | rhs.alphabet


def _check_alphabets(lhs: NormalForm, rhs: NormalForm, strict: bool) -> None:
    if strict and lhs.alphabet is not None and rhs.alphabet is not None and lhs.alphabet != rhs.alphabet:
        raise CombinatorError("Alphabet mismatch",
                              {'left': sorted(lhs.alphabet), 'right': sorted(rhs.alphabet)})


def _operand_parts(form: NormalForm, prefix: str) -> Tuple[List[List[Tuple[Part, ...]]], Tuple[Production, ...]]:
    """Entry references of an operand's N, renamed into the combined grammar"""
    renamed = form.N.grammar().renamed(prefix)
    parts = [[(prefix + symbol,) if symbol is not None else () for symbol in row]
             for row in form.N.symbols]
    return parts, renamed.productions


def _block_diagonal(top, bottom, fill) -> List[list]:
    n1, n2 = len(top), len(bottom)
    grid = _square(n1 + n2, fill)
    for i in range(n1):
        for j in range(n1):
            grid[i][j] = top[i][j]
    for i in range(n2):
        for j in range(n2):
            grid[n1 + i][n1 + j] = bottom[i][j]
    return grid


def _combine_two(lhs: NormalForm, rhs: NormalForm, bridge: bool, style: Optional[str],
                 alphabet: Optional[FrozenSet[str]]) -> NormalForm:
    n1, n2 = lhs.n, rhs.n
    n = n1 + n2
    U = _block_diagonal(lhs.U, rhs.U, None)
    V = _block_diagonal(lhs.V, rhs.V, None)

    left_parts, left_productions = _operand_parts(lhs, LEFT)
    right_parts, right_productions = _operand_parts(rhs, RIGHT)
    parts = _block_diagonal(left_parts, right_parts, ())
    links = [(i, j) for i in range(n1) for j in range(n2) if bridge and lhs.F[i] and rhs.S[j]]
    for i, j in links:
        parts[i][n1 + j] = (ONE,)

    def base() -> List[List[TensorExpr]]:
        grid = _block_diagonal(lhs.N.expression_matrix().grid(), rhs.N.expression_matrix().grid(), ZERO)
        for i, j in links:
            grid[i][n1 + j] = ONE
        return grid

    N = CentralizerMatrix.closure(U, base, V, style=style, parts=parts,
                                  base_productions=left_productions + right_productions)
    if bridge:
        S = tuple(lhs.S) + (False,) * n2
        F = (False,) * n1 + tuple(rhs.F)
    else:
        S = tuple(lhs.S) + tuple(rhs.S)
        F = tuple(lhs.F) + tuple(rhs.F)
    logger.info(f"Combined normal forms of dimensions {n1} and {n2} into {n}")
    return _wrap(S, U, N, V, F, lhs.m, alphabet)


def _plus_closure(form: NormalForm, style: Optional[str]) -> NormalForm:
    n = form.n
    parts, productions = _operand_parts(form, LEFT)
    links = [(i, j) for i in range(n) for j in range(n) if form.F[i] and form.S[j]]
    for i, j in links:
        parts[i][j] = parts[i][j] + (ONE,)

    def base() -> List[List[TensorExpr]]:
        grid = form.N.expression_matrix().grid()
        for i, j in links:
            grid[i][j] = plus(grid[i][j], ONE)
        return grid

    N = CentralizerMatrix.closure(form.U, base, form.V, style=style, parts=parts,
                                  base_productions=productions)
    return _wrap(form.S, form.U, N, form.V, form.F, form.m, form.alphabet)


@performance_monitor
def nf_combine(op: str, lhs: NormalForm, rhs: Optional[NormalForm] = None,
               style: Optional[str] = None, strict_alphabet: bool = False) -> NormalForm:
    """
    Combine first normal forms by plus, concat, plusclosure or star

    Args:
        op (str): one of COMBINATORS
        lhs (NormalForm): first operand
        rhs (NormalForm): second operand of plus and concat
        style (str): grammar style of the new N
        strict_alphabet (bool): require equal declared alphabets

    Returns:
        NormalForm: first normal form of the combined element

    Raises:
        CombinatorError: on an unknown operation, a missing operand, or an m or alphabet mismatch
    """
    if op not in COMBINATORS:
        raise CombinatorError(f"Unknown combinator {op!r}", {'known': list(COMBINATORS)})
    binary = op in ('plus', 'concat')
    if binary and rhs is None:
        raise CombinatorError(f"{op} needs two operands")
    if not binary and rhs is not None:
        raise CombinatorError(f"{op} takes one operand")
    alphabet = _check_operands(lhs, rhs)
    if binary:
        _check_alphabets(lhs, rhs, strict_alphabet)

    try:
        if op == 'plus':
            return _combine_two(lhs, rhs, bridge=False, style=style, alphabet=alphabet)
        if op == 'concat':
            return _combine_two(lhs, rhs, bridge=True, style=style, alphabet=alphabet)
        closed = _plus_closure(lhs, style)
        if op == 'plusclosure':
            return closed
        unit = constant_normal_form(ONE, lhs.m, style)
        return _combine_two(unit, closed, bridge=False, style=style, alphabet=lhs.alphabet)
    except Exception as e:
        logger.error(f"Error combining normal forms ({op}): {str(e)}")
        raise


def normal_form_of(expr: TensorExpr, m: Optional[int] = None, style: Optional[str] = None,
                   config: ToolkitConfig = default_config) -> NormalForm:
    """
    First normal form of an expression built from leaves by the combinators only

    A bracket-free subexpression is taken as a single atom leaf.

    Args:
        expr (TensorExpr): the expression
        m (int): bracket count, at least the configured m and covering expr
        style (str): grammar style of every N

    Returns:
        NormalForm: first normal form denoting expr
    """
    m = max(config.m if m is None else m, max_bracket_index(expr) + 1)
    style = style or config.grammar_style
    built = {}

    def build(node: TensorExpr) -> NormalForm:
        key = id(node)
        if key in built:
            return built[key]
        if node.kind in (ExprKind.ZERO, ExprKind.ONE):
            result = constant_normal_form(node, m, style)
        elif is_bracket_free(node):
            result = atom_normal_form(node, m, style)
        elif node.kind is ExprKind.ATOM:
            result = bracket_normal_form(node.token, m, style)
        elif node.kind is ExprKind.STAR:
            result = nf_combine('star', build(node.children[0]), style=style)
        else:
            op = 'plus' if node.kind is ExprKind.SUM else 'concat'
            result = build(node.children[0])
            for child in node.children[1:]:
                result = nf_combine(op, result, build(child), style=style)
        built[key] = result
        return result

    form = build(expr)
    logger.info(f"Normal form of dimension {form.n} built by combinators")
    return form
