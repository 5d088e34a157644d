"""
normalize.py - Grammar cleanup and normalization

normalize() produces an equivalent grammar whose start symbol never occurs in
a body, whose only epsilon production is start -> ; (when the language holds
the empty word), without unit productions, and whose bodies of length two or
more consist of nonterminals only.
"""

from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple
import logging

from src.grammar.cfg import Grammar, Production

# Configure logging
logger = logging.getLogger(__name__)


def fresh_symbol(base: str, taken: Set[str]) -> str:
    """base, or base followed by primes, avoiding the taken names"""
    symbol = base
    while symbol in taken:
        symbol += "'"
    taken.add(symbol)
    return symbol


def productive_symbols(grammar: Grammar, heads: Optional[Set[str]] = None) -> Set[str]:
    heads = grammar.nonterminals if heads is None else heads
    productive: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for p in grammar.productions:
            if p.head not in productive and all(s not in heads or s in productive for s in p.body):
                productive.add(p.head)
                changed = True
    return productive


def reachable_symbols(grammar: Grammar) -> Set[str]:
    groups = grammar.by_head()
    reached = {grammar.start}
    stack = [grammar.start]
    while stack:
        head = stack.pop()
        for body in groups.get(head, ()):
            for symbol in body:
                if symbol in groups and symbol not in reached:
                    reached.add(symbol)
                    stack.append(symbol)
    return reached


def remove_useless(grammar: Grammar) -> Grammar:
    """Drop unproductive nonterminals, then unreachable ones"""
    heads = grammar.nonterminals
    productive = productive_symbols(grammar)
    kept = tuple(p for p in grammar.productions
                 if p.head in productive and all(s not in heads or s in productive for s in p.body))
    reached = reachable_symbols(grammar.rebuilt(kept))
    return grammar.rebuilt(p for p in kept if p.head in reached)


def prune(productions: Sequence[Production], roots: Iterable[str],
          nonterminals: Iterable[str] = ()) -> Tuple[Tuple[Production, ...], Set[str]]:
    """
    Keep the productions of productive nonterminals reachable from any root

    Symbols listed in nonterminals count as nonterminals even without productions.

    Returns:
        the kept productions and the set of productive nonterminals
    """
    roots = list(roots)
    if not roots:
        return (), set()
    pool = Grammar(roots[0], tuple(productions))
    heads = pool.nonterminals | set(nonterminals)
    productive = productive_symbols(pool, heads)
    live = [p for p in pool.productions
            if p.head in productive and all(s not in heads or s in productive for s in p.body)]
    groups: Dict[str, List[Production]] = {}
    for p in live:
        groups.setdefault(p.head, []).append(p)
    reached = {r for r in roots if r in productive}
    stack = list(reached)
    while stack:
        head = stack.pop()
        for p in groups.get(head, ()):
            for symbol in p.body:
                if symbol in groups and symbol not in reached:
                    reached.add(symbol)
                    stack.append(symbol)
    return tuple(p for p in live if p.head in reached), productive


def nullable_symbols(grammar: Grammar) -> Set[str]:
    nullable: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for p in grammar.productions:
            if p.head not in nullable and all(s in nullable for s in p.body):
                nullable.add(p.head)
                changed = True
    return nullable


def _separate_start(grammar: Grammar) -> Grammar:
    taken = set(grammar.nonterminals) | set(grammar.terminals)
    start = fresh_symbol("S0", taken)
    return grammar.rebuilt((Production(start, (grammar.start,)),) + grammar.productions, start)


def _eliminate_epsilon(grammar: Grammar) -> Grammar:
    nullable = nullable_symbols(grammar)
    # nonterminals deriving only the empty word vanish from every body
    hollow = nullable - {p.head for p in grammar.productions if p.body}
    result: List[Production] = []
    for p in grammar.productions:
        options = [((),) if s in hollow else ((s,), ()) if s in nullable else ((s,),) for s in p.body]
        for choice in cartesian(*options):
            body = tuple(s for part in choice for s in part)
            if body:
                result.append(Production(p.head, body))
    if grammar.start in nullable:
        result.append(Production(grammar.start, ()))
    return grammar.rebuilt(result)


def _eliminate_units(grammar: Grammar) -> Grammar:
    heads = grammar.nonterminals
    groups = grammar.by_head()

    def is_unit(body: Tuple[str, ...]) -> bool:
        return len(body) == 1 and body[0] in heads

    result: List[Production] = []
    for head in groups:
        reach = {head}
        stack = [head]
        while stack:
            current = stack.pop()
            for body in groups.get(current, ()):
                if is_unit(body) and body[0] not in reach:
                    reach.add(body[0])
                    stack.append(body[0])
        for target in (t for t in groups if t in reach):
            for body in groups[target]:
                if not is_unit(body):
                    result.append(Production(head, body))
    return grammar.rebuilt(result)


def _isolate_terminals(grammar: Grammar) -> Grammar:
    heads = grammar.nonterminals
    taken = set(heads) | set(grammar.terminals)
    wrappers: Dict[str, str] = {}
    result: List[Production] = []
    for p in grammar.productions:
        if len(p.body) < 2:
            result.append(p)
            continue
        body = []
        for symbol in p.body:
            if symbol in heads:
                body.append(symbol)
                continue
            if symbol not in wrappers:
                wrappers[symbol] = fresh_symbol(f"T_{symbol}", taken)
            body.append(wrappers[symbol])
        result.append(Production(p.head, tuple(body)))
    result.extend(Production(wrapper, (symbol,)) for symbol, wrapper in wrappers.items())
    return grammar.rebuilt(result)


def normalize(grammar: Grammar) -> Grammar:
    """
    Equivalent grammar in the normalized shape described above

    Args:
        grammar (Grammar): any grammar

    Returns:
        Grammar: normalized grammar with a fresh start symbol
    """
    g = remove_useless(grammar)
    g = _separate_start(g)
    g = _eliminate_epsilon(g)
    g = _eliminate_units(g)
    g = _isolate_terminals(g)
    g = remove_useless(g)
    logger.info(f"Normalized grammar: {grammar.size()} -> {g.size()} productions")
    return g


def accepts_empty(normalized: Grammar) -> bool:
    """Empty-word flag of a normalized grammar"""
    return Production(normalized.start, ()) in normalized.productions
