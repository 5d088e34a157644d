"""
normal_form.py - First, reduced and second normal forms of split automata

    first:    S (N V)* N (U N)* F
    reduced:  S N F
    second:   S N (W N)* F

N is the centralizer matrix of the split. Its entries already carry the outer
p0 ... q0 pair, so in the second form the splice pi is the plain adjacency of
two N entries and W acts as a 0/1 matrix.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple
import logging

from src.grammar.cfg import Grammar, Production
from src.grammar.normalize import fresh_symbol, prune
from src.kleene.algebra import expression_algebra
from src.kleene.automaton import vector_language
from src.kleene.expressions import TensorExpr, ZERO, ONE, tokens_of
from src.kleene.matrix import SquareMatrix, matrix_star
from src.kleene.parser import regex_print
from src.normal_forms.centralizer_matrix import CentralizerMatrix, compute_N
from src.normal_forms.split_automaton import SplitAutomaton, BracketGrid, BoolGrid
from src.rewriting.tokens import TokenKind
from src.tensor.centralizer import centralizer_check_bounded
from src.utils.config import ToolkitConfig, default_config
from src.utils.errors import ShapeViolationError, SplitShapeError

# Configure logging
logger = logging.getLogger(__name__)


class NormalFormKind(Enum):
    FIRST = "first"
    REDUCED = "reduced"
    SECOND = "second"


@dataclass(frozen=True)
class NormalForm:
    """
    Matrix-level normal form <S, U, N, V, W, F>

    alphabet is the letter set the form was built over, None when unconstrained.
    """
    kind: NormalFormKind
    S: Tuple[bool, ...]
    U: BracketGrid
    N: CentralizerMatrix
    V: BracketGrid
    W: BoolGrid
    F: Tuple[bool, ...]
    m: int
    alphabet: Optional[FrozenSet[str]] = None

    @property
    def n(self) -> int:
        return len(self.S)

    def iteration_matrix(self, split: str = 'first') -> SquareMatrix:
        """
        The matrix between S and F: (NV)*N(UN)*, N or N(WN)*
        """
        N = self.N.expression_matrix()
        if self.kind is NormalFormKind.REDUCED:
            return N
        if self.kind is NormalFormKind.SECOND:
            W = SquareMatrix(expression_algebra, [[ONE if w else ZERO for w in row] for row in self.W])
            return N * matrix_star(W * N, split)
        U = self.N.bracket_matrix(self.U, closing=False)
        V = self.N.bracket_matrix(self.V, closing=True)
        return matrix_star(N * V, split) * N * matrix_star(U * N, split)

    def to_expression(self, split: str = 'first') -> TensorExpr:
        """The element denoted by the normal form"""
        if not any(self.S) or not any(self.F):
            return ZERO
        return vector_language(self.S, self.iteration_matrix(split), self.F)

    def language_grammar(self) -> Grammar:
        """
        Grammar over the letters for a reduced or second normal form

            Start -> Chain_i                    (S_i)
            Chain_i -> N_ij                     (F_j)
            Chain_i -> N_ik Chain_l             (W_kl)

        Raises:
            ShapeViolationError: for a first normal form, whose language keeps brackets
        """
        if self.kind is NormalFormKind.FIRST:
            raise ShapeViolationError("A first normal form has no grammar over the letters")
        n = self.n
        taken = set(self.N.grammar().nonterminals) | {p.head for p in self.N.productions}
        start = fresh_symbol("S", taken)
        chains = [fresh_symbol(f"C_{i}", taken) for i in range(n)]

        productions: List[Production] = [Production(start, (chains[i],)) for i in range(n) if self.S[i]]
        for i in range(n):
            for j in range(n):
                symbol = self.N.symbol(i, j)
                if symbol is None:
                    continue
                if self.F[j]:
                    productions.append(Production(chains[i], (symbol,)))
                for l in range(n):
                    if self.W[j][l]:
                        productions.append(Production(chains[i], (symbol, chains[l])))

        kept, _ = prune(tuple(productions) + self.N.productions, [start], nonterminals=chains + [start])
        return Grammar(start, kept)

    def to_dict(self, with_expressions: bool = True) -> Dict[str, Any]:
        """
        Plain document {kind, n, m, S, F, U, X, V, W, N_expr, grammar}

        X is the base matrix of N. Expressions are left out when with_expressions is False.
        """
        def brackets(grid, prefix):
            return [[f"{prefix}{x}" if x is not None else "0" for x in row] for row in grid]

        document: Dict[str, Any] = {
            'kind': self.kind.value,
            'n': self.n,
            'm': self.m,
            'S': [int(x) for x in self.S],
            'F': [int(x) for x in self.F],
            'U': brackets(self.U, 'p'),
            'V': brackets(self.V, 'q'),
            'W': [[int(x) for x in row] for row in self.W]
        }
        if self.alphabet is not None:
            document['alphabet'] = sorted(self.alphabet)
        matrix = self.N.to_dict(with_expressions)
        document['N_symbols'] = matrix['symbols']
        document['grammar'] = matrix['grammar']
        if with_expressions:
            document['X'] = [[regex_print(x) for x in row] for row in self.N.base_matrix()]
            document['N_expr'] = matrix['N_expr']
        return document


def bracket_count(automaton: SplitAutomaton, config: ToolkitConfig = default_config) -> int:
    """Bracket count m: the configured one, raised to cover the automaton's brackets"""
    used = automaton.bracket_indices()
    return max(config.m, max(used) + 1 if used else 0)


def letter_alphabet(automaton: SplitAutomaton) -> FrozenSet[str]:
    return frozenset(t.letter for row in automaton.X for x in row for t in tokens_of(x)
                     if t.kind is TokenKind.LETTER)


def _normal_form(kind: NormalFormKind, automaton: SplitAutomaton, N: CentralizerMatrix,
                 config: ToolkitConfig) -> NormalForm:
    return NormalForm(kind, automaton.S, automaton.U, N, automaton.V, automaton.W, automaton.F,
                      bracket_count(automaton, config), letter_alphabet(automaton))


def first_normal_form(automaton: SplitAutomaton, style: Optional[str] = None, split: str = 'first',
                      config: ToolkitConfig = default_config) -> NormalForm:
    """
    S (NV)* N (UN)* F for a split automaton without splices

    Args:
        automaton (SplitAutomaton): automaton with W = 0
        style (str): grammar style of N, the configured one by default
        split (str): matrix star split strategy
        config (ToolkitConfig): configuration

    Returns:
        NormalForm: first normal form

    Raises:
        SplitShapeError: if the automaton has splice transitions
    """
    if automaton.has_splices():
        raise SplitShapeError("The first normal form needs W = 0")
    try:
        N = compute_N(automaton.U, automaton.X, automaton.V, style or config.grammar_style, split)
        logger.info(f"First normal form of a {automaton.n}-state automaton")
        return _normal_form(NormalFormKind.FIRST, automaton, N, config)
    except Exception as e:
        logger.error(f"Error computing first normal form: {str(e)}")
        raise


def reduced_normal_form(automaton: SplitAutomaton, bound: Optional[int] = None,
                        style: Optional[str] = None, split: str = 'first',
                        config: ToolkitConfig = default_config) -> Optional[NormalForm]:
    """
    S N F for an automaton whose language passes the bounded centralizer test

    The bounded test stands in for centralizer membership: a passing test is
    necessary, not sufficient, and no claim is made when it fails.

    Returns:
        Optional[NormalForm]: reduced normal form, or None when not applicable
    """
    if automaton.has_splices():
        raise SplitShapeError("The reduced normal form needs W = 0")
    bound = config.bound if bound is None else bound
    language = automaton.language(split)
    if not centralizer_check_bounded(language, bound, config.word_cap):
        logger.info(f"Reduced normal form not applicable at L_src={bound}")
        return None
    N = compute_N(automaton.U, automaton.X, automaton.V, style or config.grammar_style, split)
    return _normal_form(NormalFormKind.REDUCED, automaton, N, config)


def project_centralizer(automaton: SplitAutomaton, style: Optional[str] = None, split: str = 'first',
                        config: ToolkitConfig = default_config) -> NormalForm:
    """
    Second normal form S N (WN)* F of p0 (S (U + X + V + W.pi)* F) q0

    Args:
        automaton (SplitAutomaton): automaton whose U and V avoid the outer pair

    Returns:
        NormalForm: second normal form

    Raises:
        ShapeViolationError: if U or V uses bracket index 0
    """
    if automaton.uses_outer_pair():
        logger.error("Projection input uses p0 or q0 outside splices")
        raise ShapeViolationError("U and V must avoid p0 and q0; use W for splices",
                                  {'indices': sorted(automaton.bracket_indices())})
    N = compute_N(automaton.U, automaton.X, automaton.V, style or config.grammar_style, split)
    logger.info(f"Second normal form of a {automaton.n}-state automaton")
    return _normal_form(NormalFormKind.SECOND, automaton, N, config)
