"""
cfg.py - Context-free grammars and their text format

One production group per line, alternatives separated by '|', symbols by
whitespace, and ';' (or an empty alternative) for the empty body:

    S -> a S b | ;

Heads are nonterminals; every other symbol is a terminal. The first head is
the start symbol. A grammar remembers its nonterminals, so a symbol that loses
all its productions during cleanup stays a nonterminal and never turns into a
terminal letter.
"""

from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
import logging

from src.utils.errors import GrammarError

# Configure logging
logger = logging.getLogger(__name__)

ARROW = "->"
EPSILON_MARK = ";"
ALTERNATIVE = "|"


@dataclass(frozen=True)
class Production:
    """A production head -> body; the empty body is epsilon"""
    head: str
    body: Tuple[str, ...] = ()

    def is_epsilon(self) -> bool:
        return not self.body

    def __str__(self) -> str:
        return f"{self.head} {ARROW} {' '.join(self.body) if self.body else EPSILON_MARK}"


@dataclass(frozen=True)
class Grammar:
    """
    Context-free grammar with an explicit start symbol

    Productions keep their insertion order and contain no duplicates. declared
    lists nonterminals beyond the heads and the start symbol, typically those
    left without productions by an earlier pass.
    """
    start: str
    productions: Tuple[Production, ...]
    declared: FrozenSet[str] = frozenset()

    def __post_init__(self):
        if not self.start:
            raise GrammarError("Grammar needs a start symbol")
        unique = tuple(OrderedDict.fromkeys(self.productions))
        object.__setattr__(self, 'productions', unique)
        object.__setattr__(self, 'declared', frozenset(self.declared))

    @property
    def nonterminals(self) -> FrozenSet[str]:
        return frozenset(p.head for p in self.productions) | {self.start} | self.declared

    @property
    def terminals(self) -> FrozenSet[str]:
        heads = self.nonterminals
        return frozenset(s for p in self.productions for s in p.body if s not in heads)

    def is_nonterminal(self, symbol: str) -> bool:
        return symbol in self.nonterminals

    def by_head(self) -> Dict[str, List[Tuple[str, ...]]]:
        """Bodies grouped by head, heads in first-appearance order"""
        groups: Dict[str, List[Tuple[str, ...]]] = OrderedDict()
        for production in self.productions:
            groups.setdefault(production.head, []).append(production.body)
        return groups

    def alternatives(self, head: str) -> List[Tuple[str, ...]]:
        return [p.body for p in self.productions if p.head == head]

    def rebuilt(self, productions: Iterable[Production], start: Optional[str] = None) -> 'Grammar':
        """New productions over the same nonterminals, plus the new start symbol"""
        return Grammar(start or self.start, tuple(productions), self.nonterminals)

    def with_start(self, start: str) -> 'Grammar':
        return self.rebuilt(self.productions, start)

    def extended(self, productions: Iterable[Production]) -> 'Grammar':
        return self.rebuilt(self.productions + tuple(productions))

    def renamed(self, prefix: str) -> 'Grammar':
        """Prefix every nonterminal, leaving terminals alone"""
        heads = self.nonterminals

        def rename(symbol: str) -> str:
            return prefix + symbol if symbol in heads else symbol

        return Grammar(rename(self.start),
                       tuple(Production(rename(p.head), tuple(rename(s) for s in p.body))
                             for p in self.productions),
                       frozenset(rename(s) for s in heads))

    def size(self) -> int:
        return len(self.productions)

    def to_text(self) -> str:
        """Text format, start symbol first"""
        groups = self.by_head()
        heads = [self.start] + [h for h in groups if h != self.start]
        lines = []
        for head in heads:
            bodies = groups.get(head, [])
            if not bodies:
                continue
            rendered = [" ".join(body) if body else EPSILON_MARK for body in bodies]
            lines.append(f"{head} {ARROW} {f' {ALTERNATIVE} '.join(rendered)}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()


def parse_grammar(text: str, start: Optional[str] = None) -> Grammar:
    """
    Parse the grammar text format

    Args:
        text (str): grammar text, '#' starts a comment
        start (str): start symbol, the first head by default

    Returns:
        Grammar: the parsed grammar

    Raises:
        GrammarError: on a malformed line
    """
    productions: List[Production] = []
    first_head: Optional[str] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if ARROW not in line:
            raise GrammarError(f"Line {number}: missing '{ARROW}'", {'line': number, 'text': raw})
        head_text, body_text = line.split(ARROW, 1)
        head_parts = head_text.split()
        if len(head_parts) != 1:
            raise GrammarError(f"Line {number}: the head must be one symbol", {'line': number, 'text': raw})
        head = head_parts[0]
        if head in (EPSILON_MARK, ALTERNATIVE):
            raise GrammarError(f"Line {number}: reserved head {head!r}", {'line': number})
        first_head = first_head or head

        for alternative in body_text.split(ALTERNATIVE):
            symbols = [s for s in alternative.split() if s != EPSILON_MARK]
            productions.append(Production(head, tuple(symbols)))

    if first_head is None:
        raise GrammarError("Grammar text holds no productions")
    grammar = Grammar(start or first_head, tuple(productions))
    logger.info(f"Parsed grammar with {grammar.size()} productions")
    return grammar


def format_grammar(grammar: Grammar) -> str:
    return grammar.to_text()
