"""
cyk.py - Chomsky normal form and CYK membership
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple, Union
import logging

from src.grammar.cfg import Grammar, Production
from src.grammar.normalize import normalize, accepts_empty, fresh_symbol

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChomskyGrammar:
    """
    Grammar in Chomsky normal form plus the empty-word flag of the start symbol
    """
    grammar: Grammar
    accepts_empty: bool


def to_cnf(grammar: Grammar) -> ChomskyGrammar:
    """
    Chomsky normal form: every production is A -> a or A -> B C

    Args:
        grammar (Grammar): any grammar

    Returns:
        ChomskyGrammar: CNF grammar and whether the language holds the empty word
    """
    normalized = normalize(grammar)
    taken = set(normalized.nonterminals) | set(normalized.terminals)
    result: List[Production] = []
    for p in normalized.productions:
        if not p.body:
            continue
        body = p.body
        head = p.head
        while len(body) > 2:
            rest = fresh_symbol(f"{p.head}_{len(result)}", taken)
            result.append(Production(head, (body[0], rest)))
            head, body = rest, body[1:]
        result.append(Production(head, body))
    return ChomskyGrammar(normalized.rebuilt(result), accepts_empty(normalized))


def cyk_member(grammar: Union[Grammar, ChomskyGrammar], word: Union[str, Sequence[str]]) -> bool:
    """
    Exact membership of a word in the language of a grammar

    Args:
        grammar (Grammar | ChomskyGrammar): the grammar, converted to CNF if needed
        word (str | Sequence[str]): a string of one-character terminals or a terminal sequence

    Returns:
        bool: True iff the grammar derives the word
    """
    cnf = grammar if isinstance(grammar, ChomskyGrammar) else to_cnf(grammar)
    symbols = list(word)
    n = len(symbols)
    if n == 0:
        return cnf.accepts_empty

    by_terminal: Dict[str, Set[str]] = defaultdict(set)
    by_pair: Dict[Tuple[str, str], Set[str]] = defaultdict(set)
    for p in cnf.grammar.productions:
        if len(p.body) == 1:
            by_terminal[p.body[0]].add(p.head)
        else:
            by_pair[p.body].add(p.head)

    # table[i][span]: nonterminals deriving symbols[i:i+span]
    table: List[List[Set[str]]] = [[set() for _ in range(n + 1)] for _ in range(n)]
    for i, symbol in enumerate(symbols):
        table[i][1] = set(by_terminal.get(symbol, ()))

    for span in range(2, n + 1):
        for i in range(n - span + 1):
            cell = table[i][span]
            for split in range(1, span):
                for left in table[i][split]:
                    for right in table[i + split][span - split]:
                        cell |= by_pair.get((left, right), set())

    return cnf.grammar.start in table[0][n]
