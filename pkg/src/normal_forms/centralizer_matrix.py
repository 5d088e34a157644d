"""
centralizer_matrix.py - The matrix N, least solution of y >= (U y V + M)*

Every entry is held twice: as an expression, p0 ((U p1 + M + q1 V)*)_ij q0,
built lazily by the matrix star, and as a nonterminal of an attached grammar.
Two grammar styles give the same least solution:

    dyck:     N_ij -> ; (i = j) | M_ij | N_kl (U_ik V_lj match) | N_ik N_kj
    closure:  N_ij -> ; (i = j) | M_ik N_kj | N_kl N_k'j (U_ik V_lk' match)

Productions are only generated for entries joined by a balanced path, and
only with live entries in their bodies.
"""

from typing import Any, Callable, Dict, List, Optional, Sequence, Set, Tuple, Union
import logging

from src.grammar.cfg import Grammar, Production
from src.grammar.normalize import prune
from src.grammar.regular import RegularProductions
from src.kleene.algebra import expression_algebra
from src.kleene.expressions import TensorExpr, ZERO, atom, plus, times, is_bracket_free
from src.kleene.matrix import SquareMatrix, matrix_star
from src.kleene.parser import regex_print
from src.rewriting.tokens import open_bracket, close_bracket
from src.utils.config import default_config
from src.utils.decorators import performance_monitor
from src.utils.errors import SplitShapeError
from src.utils.helpers import GRAMMAR_STYLES

# Configure logging
logger = logging.getLogger(__name__)

BracketRows = Sequence[Sequence[Optional[int]]]
# an alternative of a base entry: a nonterminal of the base grammar or a bracket-free expression
Part = Union[str, TensorExpr]

OUTER, INNER = 0, 1


def entry_symbol(prefix: str, i: int, j: int) -> str:
    return f"{prefix}_{i}_{j}"


class CentralizerMatrix:
    """
    Least solution N of y >= (U y V + M)* with expression and grammar forms
    """

    def __init__(self, U: BracketRows, V: BracketRows, base: Callable[[], List[List[TensorExpr]]],
                 grammar_productions: Tuple[Production, ...], symbols: List[List[Optional[str]]],
                 style: str, split: str = 'first'):
        self.U = tuple(tuple(row) for row in U)
        self.V = tuple(tuple(row) for row in V)
        self.style = style
        self.split = split
        self.productions = grammar_productions
        self.symbols = symbols
        self._base = base
        self._expressions: Optional[SquareMatrix] = None

    @property
    def n(self) -> int:
        return len(self.symbols)

    @classmethod
    @performance_monitor
    def closure(cls, U: BracketRows, M: Union[Sequence[Sequence[TensorExpr]], Callable[[], List[List[TensorExpr]]]],
                V: BracketRows, style: Optional[str] = None,
                parts: Optional[Sequence[Sequence[Sequence[Part]]]] = None,
                base_productions: Sequence[Production] = (),
                prefix: str = "N", split: str = 'first') -> 'CentralizerMatrix':
        """
        Least solution of y >= (U y V + M)* for a base matrix M of centralizer values

        Args:
            U (BracketRows): opening bracket indices or None
            M: base matrix, or a function building it on demand
            V (BracketRows): closing bracket indices or None
            style (str): 'dyck' or 'closure' grammar
            parts: grammar alternatives of each M entry; by default the entry
                itself, which must then be bracket-free
            base_productions: productions defining the nonterminals used in parts
            prefix (str): name prefix of the entry nonterminals
            split (str): block split of the matrix star for the expression form

        Returns:
            CentralizerMatrix: the solution N
        """
        style = style or default_config.grammar_style
        if style not in GRAMMAR_STYLES:
            raise SplitShapeError(f"Unknown grammar style {style!r}")
        n = len(U)
        if len(V) != n or any(len(row) != n for row in list(U) + list(V)):
            raise SplitShapeError(f"U and V must be {n}x{n}")

        base = M if callable(M) else _constant_rows(M)
        if parts is None:
            grid = base()
            for i in range(n):
                for j in range(n):
                    if not is_bracket_free(grid[i][j]):
                        raise SplitShapeError(f"M[{i}][{j}] must be bracket-free without explicit parts")
            parts = [[(grid[i][j],) if not grid[i][j].is_zero() else () for j in range(n)] for i in range(n)]

        names = [[entry_symbol(prefix, i, j) for j in range(n)] for i in range(n)]
        taken = {s for row in names for s in row}
        taken |= {p.head for p in base_productions}
        regular = RegularProductions(taken, prefix=f"{prefix}x")

        alternatives: List[List[List[Tuple[str, ...]]]] = [[[] for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for part in parts[i][j]:
                    body = (part,) if isinstance(part, str) else regular.body_for(part)
                    if body is not None:
                        alternatives[i][j].append(body)

        productions: List[Production] = []
        steps = [{k for k in range(n) if alternatives[i][k]} for i in range(n)]
        reach = cls._balanced_reach(U, V, steps)
        if style == 'dyck':
            cls._dyck_productions(U, V, names, alternatives, reach, productions)
        else:
            cls._closure_productions(U, V, names, alternatives, reach, productions)

        pool = tuple(productions) + tuple(regular.productions) + tuple(base_productions)
        roots = [names[i][j] for i in range(n) for j in sorted(reach[i])]
        kept, productive = prune(pool, roots, nonterminals=roots)
        symbols = [[names[i][j] if names[i][j] in productive else None for j in range(n)] for i in range(n)]
        logger.info(f"Centralizer matrix of dimension {n}: {len(roots)} live entries, "
                    f"{len(kept)} productions ({style})")
        return cls(U, V, base, kept, symbols, style, split)

    @staticmethod
    def _bracket_links(U: BracketRows, V: BracketRows):
        """Opening edges per source state and closing edges per bracket index"""
        n = len(U)
        opens = [[(k, U[i][k]) for k in range(n) if U[i][k] is not None] for i in range(n)]
        closes: Dict[int, List[Tuple[int, int]]] = {}
        for l in range(n):
            for k in range(n):
                if V[l][k] is not None:
                    closes.setdefault(V[l][k], []).append((l, k))
        return opens, closes

    @classmethod
    def _balanced_reach(cls, U: BracketRows, V: BracketRows, steps: List[Set[int]]) -> List[Set[int]]:
        """
        reach[i]: the states j joined to i by a path whose brackets all match

        Grows the one-pair summaries i -> k (an opening edge, a balanced path,
        a matching closing edge) until the reachability they induce is stable.
        Entries outside reach are 0, so no productions are generated for them.
        """
        n = len(U)
        opens, _ = cls._bracket_links(U, V)
        close_out = [[(k, V[l][k]) for k in range(n) if V[l][k] is not None] for l in range(n)]
        wrapped: List[Set[int]] = [set() for _ in range(n)]
        while True:
            reach: List[Set[int]] = []
            for i in range(n):
                seen = {i}
                stack = [i]
                while stack:
                    k = stack.pop()
                    for t in steps[k] | wrapped[k]:
                        if t not in seen:
                            seen.add(t)
                            stack.append(t)
                reach.append(seen)
            grown = False
            for i in range(n):
                for k2, index in opens[i]:
                    for l in reach[k2]:
                        for k, closing in close_out[l]:
                            if closing == index and k not in wrapped[i]:
                                wrapped[i].add(k)
                                grown = True
            if not grown:
                return reach

    @classmethod
    def _dyck_productions(cls, U, V, names, alternatives, reach, out: List[Production]) -> None:
        n = len(names)
        opens, closes = cls._bracket_links(U, V)
        for i in range(n):
            for j in sorted(reach[i]):
                head = names[i][j]
                if i == j:
                    out.append(Production(head, ()))
                out.extend(Production(head, body) for body in alternatives[i][j])
                for k, index in opens[i]:
                    for l, target in closes.get(index, ()):
                        if target == j and (k, l) != (i, j) and l in reach[k]:
                            out.append(Production(head, (names[k][l],)))
                for k in sorted(reach[i]):
                    if j in reach[k]:
                        out.append(Production(head, (names[i][k], names[k][j])))

    @classmethod
    def _closure_productions(cls, U, V, names, alternatives, reach, out: List[Production]) -> None:
        n = len(names)
        opens, closes = cls._bracket_links(U, V)
        for i in range(n):
            for j in sorted(reach[i]):
                head = names[i][j]
                if i == j:
                    out.append(Production(head, ()))
                for k in range(n):
                    if not alternatives[i][k] or j not in reach[k]:
                        continue
                    for body in alternatives[i][k]:
                        production = body + (names[k][j],)
                        if production != (head,):
                            out.append(Production(head, production))
                for k2, index in opens[i]:
                    for l, k in closes.get(index, ()):
                        if l in reach[k2] and j in reach[k]:
                            out.append(Production(head, (names[k2][l], names[k][j])))

    def symbol(self, i: int, j: int) -> Optional[str]:
        """Nonterminal of entry (i, j), None when the entry is 0"""
        return self.symbols[i][j]

    def is_zero(self, i: int, j: int) -> bool:
        return self.symbols[i][j] is None

    def grammar(self, start: Optional[str] = None) -> Grammar:
        """All productions, started at the given symbol (the first live entry by default)"""
        if start is None:
            start = next((s for row in self.symbols for s in row if s is not None), entry_symbol("N", 0, 0))
        return Grammar(start, self.productions)

    def entry_grammar(self, i: int, j: int) -> Grammar:
        """Grammar of the language of entry (i, j)"""
        symbol = self.symbols[i][j]
        if symbol is None:
            return Grammar(entry_symbol("N", i, j), ())
        kept, _ = prune(self.productions, [symbol])
        return Grammar(symbol, kept)

    def base_matrix(self) -> List[List[TensorExpr]]:
        return self._base()

    def expression_matrix(self) -> SquareMatrix:
        """
        p0 ((U p1 + M + q1 V)*)_ij q0 for every entry, computed once
        """
        if self._expressions is None:
            n = self.n
            base = self._base()
            lift = []
            for i in range(n):
                row = []
                for j in range(n):
                    terms = [base[i][j]]
                    if self.U[i][j] is not None:
                        terms.append(times(atom(open_bracket(self.U[i][j])), atom(open_bracket(INNER))))
                    if self.V[i][j] is not None:
                        terms.append(times(atom(close_bracket(INNER)), atom(close_bracket(self.V[i][j]))))
                    row.append(plus(*terms))
                lift.append(row)
            closed = matrix_star(SquareMatrix(expression_algebra, lift), self.split)
            left, right = atom(open_bracket(OUTER)), atom(close_bracket(OUTER))
            self._expressions = closed.map(
                lambda e: times(left, e, right) if not e.is_zero() else ZERO)
        return self._expressions

    def expression(self, i: int, j: int) -> TensorExpr:
        return self.expression_matrix()[i, j]

    def bracket_matrix(self, grid: BracketRows, closing: bool) -> SquareMatrix:
        """U or V as a matrix of bracket atoms"""
        make = close_bracket if closing else open_bracket
        return SquareMatrix(expression_algebra, [[atom(make(x)) if x is not None else ZERO for x in row]
                                                 for row in grid])

    def to_dict(self, with_expressions: bool = True) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            'style': self.style,
            'symbols': [[s if s is not None else "0" for s in row] for row in self.symbols],
            'grammar': [str(p) for p in self.productions]
        }
        if with_expressions:
            document['N_expr'] = self.expression_matrix().to_nested(regex_print)
        return document


def compute_N(U: BracketRows, X: Sequence[Sequence[TensorExpr]], V: BracketRows,
              style: Optional[str] = None, split: str = 'first') -> CentralizerMatrix:
    """
    Centralizer matrix of a split U + X + V with bracket-free X

    Args:
        U (BracketRows): opening bracket indices
        X: bracket-free expressions
        V (BracketRows): closing bracket indices
        style (str): grammar style, 'dyck' by default
        split (str): matrix star split strategy

    Returns:
        CentralizerMatrix: N with N_ij = p0 ((U p1 + X + q1 V)*)_ij q0
    """
    return CentralizerMatrix.closure(U, X, V, style=style or 'dyck', split=split)


def _constant_rows(M: Sequence[Sequence[TensorExpr]]) -> Callable[[], List[List[TensorExpr]]]:
    rows = [list(r) for r in M]

    def build() -> List[List[TensorExpr]]:
        return rows
    return build
