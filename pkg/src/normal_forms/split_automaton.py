"""
split_automaton.py - Automata whose transition matrix splits as U + X + V + W.pi

U holds opening brackets, X bracket-free expressions, V closing brackets and
W marks splice transitions by pi = q0 p0. compile_automaton() builds one from
an expression by induction on its structure.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple
import logging

from src.kleene.algebra import expression_algebra
from src.kleene.automaton import Automaton, automaton_language
from src.kleene.expressions import (
    TensorExpr, ExprKind, ZERO, ONE, atom, plus, is_bracket_free, pi_expr
)
from src.kleene.matrix import SquareMatrix
from src.kleene.parser import regex_print
from src.rewriting.tokens import TokenKind, open_bracket, close_bracket
from src.tensor.shape import is_splice_pair
from src.utils.decorators import performance_monitor
from src.utils.errors import SplitShapeError

# Configure logging
logger = logging.getLogger(__name__)

BracketGrid = Tuple[Tuple[Optional[int], ...], ...]
ExprGrid = Tuple[Tuple[TensorExpr, ...], ...]
BoolGrid = Tuple[Tuple[bool, ...], ...]


def _square(n: int, value: Any) -> List[List[Any]]:
    return [[value] * n for _ in range(n)]


def _freeze(grid: Sequence[Sequence[Any]]) -> Tuple[Tuple[Any, ...], ...]:
    return tuple(tuple(row) for row in grid)


@dataclass(frozen=True)
class SplitAutomaton:
    """
    Automaton <S, U + X + V + W.pi, F>

    U[i][j] / V[i][j] hold the index of the opening / closing bracket on the
    edge i -> j, or None.
    """
    S: Tuple[bool, ...]
    U: BracketGrid
    X: ExprGrid
    V: BracketGrid
    W: BoolGrid
    F: Tuple[bool, ...]

    def __post_init__(self):
        n = len(self.S)
        if n == 0:
            raise SplitShapeError("Split automata need at least one state")
        if len(self.F) != n:
            raise SplitShapeError(f"F has length {len(self.F)}, expected {n}")
        for name in ('U', 'X', 'V', 'W'):
            grid = getattr(self, name)
            if len(grid) != n or any(len(row) != n for row in grid):
                raise SplitShapeError(f"{name} must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                for name in ('U', 'V'):
                    value = getattr(self, name)[i][j]
                    if value is not None and (not isinstance(value, int) or value < 0):
                        raise SplitShapeError(f"{name}[{i}][{j}] must be a bracket index or None")
                if not is_bracket_free(self.X[i][j]):
                    raise SplitShapeError(f"X[{i}][{j}] must be bracket-free")

    @property
    def n(self) -> int:
        return len(self.S)

    @classmethod
    def build(cls, S: Sequence[int], U: Sequence[Sequence[Optional[int]]],
              X: Sequence[Sequence[TensorExpr]], V: Sequence[Sequence[Optional[int]]],
              F: Sequence[int], W: Optional[Sequence[Sequence[int]]] = None) -> 'SplitAutomaton':
        """Construct from lists; W defaults to the zero matrix"""
        n = len(S)
        W = W if W is not None else _square(n, False)
        return cls(tuple(bool(x) for x in S), _freeze(U), _freeze(X), _freeze(V),
                   _freeze([[bool(x) for x in row] for row in W]), tuple(bool(x) for x in F))

    @classmethod
    def zero(cls) -> 'SplitAutomaton':
        """The one-state automaton of the empty element"""
        return cls.build([0], [[None]], [[ZERO]], [[None]], [0])

    def has_splices(self) -> bool:
        return any(any(row) for row in self.W)

    def bracket_indices(self) -> Set[int]:
        return {x for grid in (self.U, self.V) for row in grid for x in row if x is not None}

    def uses_outer_pair(self) -> bool:
        return 0 in self.bracket_indices()

    def without_splices(self) -> 'SplitAutomaton':
        return SplitAutomaton(self.S, self.U, self.X, self.V, _freeze(_square(self.n, False)), self.F)

    def entry(self, i: int, j: int) -> TensorExpr:
        """Total transition A_ij = U_ij + X_ij + V_ij + W_ij.pi"""
        terms = [self.X[i][j]]
        if self.U[i][j] is not None:
            terms.append(atom(open_bracket(self.U[i][j])))
        if self.V[i][j] is not None:
            terms.append(atom(close_bracket(self.V[i][j])))
        if self.W[i][j]:
            terms.append(pi_expr())
        return plus(*terms)

    def transition_matrix(self) -> SquareMatrix:
        return SquareMatrix(expression_algebra, [[self.entry(i, j) for j in range(self.n)]
                                                 for i in range(self.n)])

    def as_automaton(self) -> Automaton:
        return Automaton(self.S, self.transition_matrix(), self.F)

    def language(self, split: str = 'first') -> TensorExpr:
        """The element S A* F as an expression"""
        return automaton_language(self.as_automaton(), split)

    def has_edge(self, i: int, j: int) -> bool:
        return (self.U[i][j] is not None or self.V[i][j] is not None
                or self.W[i][j] or not self.X[i][j].is_zero())

    def restricted(self, states: Sequence[int]) -> 'SplitAutomaton':
        """Sub-automaton on the given states, in the given order"""
        def pick(grid):
            return [[grid[i][j] for j in states] for i in states]
        return SplitAutomaton.build([self.S[i] for i in states], pick(self.U), pick(self.X),
                                    pick(self.V), [self.F[i] for i in states], pick(self.W))

    def trim(self) -> 'SplitAutomaton':
        """
        Remove states that are unreachable from S or cannot reach F

        Returns:
            SplitAutomaton: an automaton with the same language
        """
        n = self.n
        forward = {i for i in range(n) if self.S[i]}
        stack = list(forward)
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in forward and self.has_edge(i, j):
                    forward.add(j)
                    stack.append(j)
        backward = {j for j in range(n) if self.F[j]}
        stack = list(backward)
        while stack:
            j = stack.pop()
            for i in range(n):
                if i not in backward and self.has_edge(i, j):
                    backward.add(i)
                    stack.append(i)
        useful = sorted(forward & backward)
        if not useful:
            return SplitAutomaton.zero()
        if len(useful) < n:
            logger.info(f"Trimmed automaton from {n} to {len(useful)} states")
        return self.restricted(useful)

    def to_dict(self) -> Dict[str, Any]:
        """Plain document of the split, with brackets and expressions as text"""
        def brackets(grid, prefix):
            return [[f"{prefix}{x}" if x is not None else "0" for x in row] for row in grid]
        return {
            'n': self.n,
            'S': [int(x) for x in self.S],
            'F': [int(x) for x in self.F],
            'U': brackets(self.U, 'p'),
            'X': [[regex_print(x) for x in row] for row in self.X],
            'V': brackets(self.V, 'q'),
            'W': [[int(x) for x in row] for row in self.W]
        }


class _Cell:
    """Contents of one edge i -> j while compiling"""
    __slots__ = ("x", "u", "v", "w")

    def __init__(self, x: TensorExpr = ZERO, u: Optional[int] = None, v: Optional[int] = None, w: bool = False):
        self.x, self.u, self.v, self.w = x, u, v, w

    def is_epsilon(self) -> bool:
        return self.x.is_one() and self.u is None and self.v is None and not self.w

    def fits(self, other: '_Cell') -> bool:
        """True if the two cells can share one edge"""
        return ((self.u is None or other.u is None or self.u == other.u)
                and (self.v is None or other.v is None or self.v == other.v))

    def absorb(self, other: '_Cell') -> None:
        self.x = plus(self.x, other.x)
        self.u = self.u if self.u is not None else other.u
        self.v = self.v if self.v is not None else other.v
        self.w = self.w or other.w


Fragment = Tuple[List[int], List[int]]


class _Compiler:
    """
    Sparse edge table filled by the structural induction

    Every occurrence of a subterm gets its own states, allocated once, so the
    work is linear in the unfolded expression. Pure unit edges are contracted
    afterwards where that cannot change the language.
    """

    def __init__(self, detect_pi: bool):
        self.detect_pi = detect_pi
        self.out: Dict[int, Dict[int, _Cell]] = {}
        self.inn: Dict[int, Set[int]] = {}
        self.starts: Set[int] = set()
        self.finals: Set[int] = set()

    def state(self) -> int:
        s = len(self.out)
        self.out[s] = {}
        self.inn[s] = set()
        return s

    def edge(self, i: int, j: int, cell: _Cell) -> None:
        current = self.out[i].get(j)
        if current is None:
            self.out[i][j] = cell
            self.inn[j].add(i)
        else:
            current.absorb(cell)

    def link(self, finals: List[int], starts: List[int]) -> None:
        for i in finals:
            for j in starts:
                self.edge(i, j, _Cell(x=ONE))

    def step(self, cell: _Cell) -> Fragment:
        s, t = self.state(), self.state()
        self.edge(s, t, cell)
        return [s], [t]

    def fragment(self, node: TensorExpr) -> Fragment:
        if node.kind is ExprKind.ZERO:
            return [], []
        if node.kind is ExprKind.ONE:
            s = self.state()
            return [s], [s]
        if node.kind is ExprKind.ATOM:
            token = node.token
            if token.kind is TokenKind.OPEN:
                return self.step(_Cell(u=token.index))
            if token.kind is TokenKind.CLOSE:
                return self.step(_Cell(v=token.index))
            return self.step(_Cell(x=node))
        if node.kind is ExprKind.SUM:
            starts: List[int] = []
            finals: List[int] = []
            for child in node.children:
                s, f = self.fragment(child)
                starts += s
                finals += f
            return starts, finals
        if node.kind is ExprKind.PRODUCT:
            children = node.children
            pieces: List[Fragment] = []
            k = 0
            while k < len(children):
                if self.detect_pi and k + 1 < len(children) and is_splice_pair(children[k], children[k + 1]):
                    pieces.append(self.step(_Cell(w=True)))
                    k += 2
                else:
                    pieces.append(self.fragment(children[k]))
                    k += 1
            starts, finals = pieces[0]
            for s, f in pieces[1:]:
                self.link(finals, s)
                finals = f
            return starts, finals
        # star: a fresh state for the empty word, plus the loop F -> S
        u = self.state()
        s, f = self.fragment(node.children[0])
        self.link(f, s)
        return [u] + s, [u] + f

    def _remove(self, s: int) -> None:
        del self.out[s]
        del self.inn[s]
        self.starts.discard(s)
        self.finals.discard(s)

    def _merge_forward(self, i: int, j: int) -> bool:
        """Fold j into i when the unit edge i -> j is the only way into j"""
        if j in self.starts or self.inn[j] != {i} or j in self.out[j]:
            return False
        if any(k in self.out[i] and not self.out[i][k].fits(cell) for k, cell in self.out[j].items()):
            return False
        del self.out[i][j]
        for k, cell in self.out[j].items():
            self.inn[k].discard(j)
            self.edge(i, k, cell)
        if j in self.finals:
            self.finals.add(i)
        self._remove(j)
        return True

    def _merge_backward(self, i: int, j: int) -> bool:
        """Fold i into j when the unit edge i -> j is the only way out of i"""
        if i in self.finals or set(self.out[i]) != {j} or i in self.inn[i]:
            return False
        if any(j in self.out[k] and not self.out[k][j].fits(self.out[k][i]) for k in self.inn[i]):
            return False
        del self.out[i][j]
        self.inn[j].discard(i)
        for k in list(self.inn[i]):
            self.edge(k, j, self.out[k].pop(i))
        if i in self.starts:
            self.starts.add(j)
        self._remove(i)
        return True

    def contract(self) -> None:
        changed = True
        while changed:
            changed = False
            for i in list(self.out):
                if i not in self.out:
                    continue
                for j, cell in list(self.out[i].items()):
                    if j != i and cell.is_epsilon() and (self._merge_forward(i, j) or self._merge_backward(i, j)):
                        changed = True
                        break

    def materialize(self) -> SplitAutomaton:
        """Dense split over the remaining states, with unit loops in X"""
        order = sorted(self.out)
        if not order or not self.starts or not self.finals:
            return SplitAutomaton.zero()
        index = {s: k for k, s in enumerate(order)}
        n = len(order)
        U, V = _square(n, None), _square(n, None)
        X, W = _square(n, ZERO), _square(n, False)
        for s in order:
            X[index[s]][index[s]] = ONE
            for t, cell in self.out[s].items():
                i, j = index[s], index[t]
                X[i][j] = plus(X[i][j], cell.x)
                U[i][j], V[i][j], W[i][j] = cell.u, cell.v, cell.w
        return SplitAutomaton.build([int(s in self.starts) for s in order], U, X, V,
                                    [int(s in self.finals) for s in order], W)


@performance_monitor
def compile_automaton(expr: TensorExpr, detect_pi: bool = False, trim: bool = False) -> SplitAutomaton:
    """
    Split automaton of an expression by induction on its structure

        atom:     two states joined by the atom's edge
        sum:      the operands side by side
        product:  unit edges from the finals of each operand to the starts of the next
        star:     a fresh start-and-final state plus unit edges F -> S

    Args:
        expr (TensorExpr): the expression
        detect_pi (bool): turn each adjacent q0 p0 inside a product into a W edge
        trim (bool): remove useless states afterwards

    Returns:
        SplitAutomaton: automaton with language bounded-equal to expr
    """
    try:
        compiler = _Compiler(detect_pi)
        starts, finals = compiler.fragment(expr)
        compiler.starts, compiler.finals = set(starts), set(finals)
        allocated = len(compiler.out)
        compiler.contract()
        automaton = compiler.materialize()
        if trim:
            automaton = automaton.trim()
        logger.info(f"Compiled expression into a {automaton.n}-state split automaton "
                    f"({allocated} states before contraction)")
        return automaton
    except Exception as e:
        logger.error(f"Error compiling expression: {str(e)}")
        raise
