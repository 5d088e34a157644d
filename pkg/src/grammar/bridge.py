"""
bridge.py - Conversions between context-free grammars and expressions p0 r q0

cfg_to_expr builds r from an automaton over the items A -> alpha . beta of
the grammar. Calling a nonterminal pushes a bracket that names the return
item, finishing a production pops it again:

    A -> alpha . B beta   --p_r-->   B -> . gamma
    B -> gamma .          --q_r-->   A -> alpha B . beta

with one bracket pair r per occurrence of a nonterminal in a body. The outer
pair p0 ... q0 accepts only balanced traces. By default the inner brackets are
recoded into the two pairs p1, p2. The automaton is turned into r by state
elimination, which keeps r close to the size of the grammar.

expr_to_cfg goes the other way through the second normal form.
"""

from typing import Dict, List, Optional, Tuple
import logging

from src.grammar.cfg import Grammar
from src.grammar.normalize import remove_useless
from src.kleene.algebra import expression_algebra
from src.kleene.automaton import Automaton, eliminate_states
from src.kleene.expressions import TensorExpr, ZERO, ONE, atom, plus, times, word_expr
from src.kleene.matrix import SquareMatrix
from src.rewriting.recoding import RecodingMode, encode_token
from src.rewriting.tokens import Token, TokenKind, letter, open_bracket, close_bracket
from src.tensor.shape import outer_body, check_splice_condition
from src.utils.config import ToolkitConfig, default_config
from src.utils.decorators import performance_monitor
from src.utils.errors import GrammarError

# Configure logging
logger = logging.getLogger(__name__)

START, FINAL = 0, 1


class _ItemAutomaton:
    """States and labelled edges of the item automaton of a grammar"""

    def __init__(self, grammar: Grammar, recode: bool):
        self.grammar = grammar
        self.productions = list(grammar.productions)
        self.heads = grammar.nonterminals
        self.states: Dict[Tuple[int, int], int] = {}
        for i, p in enumerate(self.productions):
            for dot in range(len(p.body) + 1):
                self.states[(i, dot)] = len(self.states) + 2
        # one return item per nonterminal occurrence
        self.returns: List[Tuple[int, int]] = [(i, dot) for i, p in enumerate(self.productions)
                                               for dot, s in enumerate(p.body) if s in self.heads]
        self.pairs = max(len(self.returns), 2)
        self.recode = recode
        n = len(self.states) + 2
        self.edges: List[List[TensorExpr]] = [[ZERO] * n for _ in range(n)]

    def bracket(self, r: int, closing: bool) -> TensorExpr:
        """Label of return bracket r, recoded into pairs 1 and 2 or shifted past the outer pair"""
        token = close_bracket(r) if closing else open_bracket(r)
        if not self.recode:
            return atom(close_bracket(r + 1) if closing else open_bracket(r + 1))
        encoded = encode_token(token, self.pairs, RecodingMode.POLYCYCLIC)
        return word_expr([_shifted(t) for t in encoded])

    def add(self, source: int, target: int, label: TensorExpr) -> None:
        self.edges[source][target] = plus(self.edges[source][target], label)

    def build(self) -> TensorExpr:
        by_head: Dict[str, List[int]] = {}
        for i, p in enumerate(self.productions):
            by_head.setdefault(p.head, []).append(i)
        for i in by_head.get(self.grammar.start, ()):
            self.add(START, self.states[(i, 0)], ONE)

        return_index = {item: r for r, item in enumerate(self.returns)}
        for i, p in enumerate(self.productions):
            for dot, symbol in enumerate(p.body):
                here = self.states[(i, dot)]
                if symbol in self.heads:
                    r = return_index[(i, dot)]
                    for j in by_head.get(symbol, ()):
                        self.add(here, self.states[(j, 0)], self.bracket(r, closing=False))
                else:
                    self.add(here, self.states[(i, dot + 1)], atom(letter(symbol)))
            end = self.states[(i, len(p.body))]
            if p.head == self.grammar.start:
                self.add(end, FINAL, ONE)
            for r, (caller, dot) in enumerate(self.returns):
                if self.productions[caller].body[dot] == p.head:
                    self.add(end, self.states[(caller, dot + 1)], self.bracket(r, closing=True))

        n = len(self.edges)
        automaton = Automaton.build([int(k == START) for k in range(n)],
                                    SquareMatrix(expression_algebra, self.edges),
                                    [int(k == FINAL) for k in range(n)])
        return eliminate_states(automaton)


def _shifted(token: Token) -> Token:
    """Move a bracket of the two-pair recoding past the outer pair"""
    if token.kind is TokenKind.OPEN:
        return open_bracket(token.index + 1)
    if token.kind is TokenKind.CLOSE:
        return close_bracket(token.index + 1)
    return token


@performance_monitor
def cfg_to_expr(grammar: Grammar, recode: bool = True) -> TensorExpr:
    """
    Expression p0 r q0 whose bounded image is the language of the grammar

    Args:
        grammar (Grammar): grammar with single-character terminals
        recode (bool): recode the return brackets into two pairs

    Returns:
        TensorExpr: the expression, 0 for an empty language

    Raises:
        GrammarError: on a terminal longer than one character
    """
    # brackets are numbered per nonterminal occurrence, not per production; a
    # production bracket alone cannot name the caller to return to (DESIGN.md,
    # "Canonical representation of a grammar")
    try:
        long_terminals = sorted(t for t in grammar.terminals if len(t) != 1)
        if long_terminals:
            raise GrammarError("Terminals must be single characters", {'terminals': long_terminals})
        useful = remove_useless(grammar)
        if not useful.productions:
            logger.info("Grammar generates the empty language")
            return ZERO
        items = _ItemAutomaton(useful, recode)
        body = items.build()
        result = times(atom(open_bracket(0)), body, atom(close_bracket(0)))
        logger.info(f"Converted grammar with {useful.size()} productions using "
                    f"{len(items.returns)} return brackets")
        return result
    except Exception as e:
        logger.error(f"Error converting grammar to expression: {str(e)}")
        raise


@performance_monitor
def expr_to_cfg(expr: TensorExpr, style: Optional[str] = None,
                config: ToolkitConfig = default_config) -> Grammar:
    """
    Grammar of an expression p0 r q0 through its second normal form

    Args:
        expr (TensorExpr): expression of shape p0 r q0, with p0 and q0 inside r
            only as splices q0 p0
        style (str): grammar style of the centralizer matrix

    Returns:
        Grammar: grammar over the letters of expr

    Raises:
        ShapeViolationError: if expr does not have the required shape
    """
    from src.normal_forms.normal_form import project_centralizer
    from src.normal_forms.split_automaton import compile_automaton

    try:
        body = outer_body(expr)
        check_splice_condition(body)
        automaton = compile_automaton(body, detect_pi=True, trim=True)
        form = project_centralizer(automaton, style=style or config.grammar_style, config=config)
        grammar = form.language_grammar()
        logger.info(f"Extracted grammar with {grammar.size()} productions")
        return grammar
    except Exception as e:
        logger.error(f"Error converting expression to grammar: {str(e)}")
        raise
