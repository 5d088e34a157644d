"""
automaton.py - Finite automata <S, A, F> over a Kleene algebra and their language S.A*.F
"""

from dataclasses import dataclass
from typing import Dict, Generic, Sequence, Set, Tuple, TypeVar
import logging

from src.kleene.matrix import SquareMatrix, matrix_star
from src.utils.errors import AutomatonShapeError

# Configure logging
logger = logging.getLogger(__name__)

T = TypeVar('T')


@dataclass(frozen=True)
class Automaton(Generic[T]):
    """
    Boolean initial row S, transition matrix A, boolean final column F
    """
    initial: Tuple[bool, ...]
    transitions: SquareMatrix
    final: Tuple[bool, ...]

    def __post_init__(self):
        n = self.transitions.n
        if len(self.initial) != n or len(self.final) != n:
            raise AutomatonShapeError(
                f"Automaton vectors must have length {n}, got S={len(self.initial)} F={len(self.final)}")
        if any(not isinstance(x, bool) for x in self.initial + self.final):
            raise AutomatonShapeError("S and F entries must be booleans")

    @property
    def n(self) -> int:
        return self.transitions.n

    @classmethod
    def build(cls, initial: Sequence[int], transitions: SquareMatrix, final: Sequence[int]) -> 'Automaton':
        return cls(tuple(bool(x) for x in initial), transitions, tuple(bool(x) for x in final))


def vector_language(initial: Sequence[bool], closure: SquareMatrix, final: Sequence[bool]):
    """S.M.F for a matrix M that is already starred"""
    algebra = closure.algebra
    return algebra.sum(closure[i, j]
                       for i in range(closure.n) if initial[i]
                       for j in range(closure.n) if final[j])


def automaton_language(automaton: Automaton, split: str = 'first'):
    """
    The element S.A*.F recognized by an automaton

    Args:
        automaton (Automaton): well-formed automaton
        split (str): block split strategy of the matrix star

    Returns:
        The algebra element S.A*.F
    """
    if not any(automaton.initial) or not any(automaton.final):
        return automaton.transitions.algebra.zero
    closure = matrix_star(automaton.transitions, split)
    return vector_language(automaton.initial, closure, automaton.final)


def eliminate_states(automaton: Automaton):
    """
    The element S.A*.F by state elimination

    A fresh source and sink are attached, then the states are removed one at a
    time, always the one with the fewest in-edge/out-edge pairs. Removing s
    reroutes every p -> s -> q through p -> s* -> q. On sparse automata the
    result is usually far smaller than the entries of the matrix star.

    Args:
        automaton (Automaton): well-formed automaton

    Returns:
        The algebra element S.A*.F
    """
    algebra = automaton.transitions.algebra
    n = automaton.n
    if not any(automaton.initial) or not any(automaton.final):
        return algebra.zero
    source, sink = n, n + 1
    edges: Dict[int, Dict[int, T]] = {k: {} for k in range(n + 2)}
    preds: Dict[int, Set[int]] = {k: set() for k in range(n + 2)}

    def link(p: int, q: int, label: T) -> None:
        if algebra.is_trivially_zero(label):
            return
        current = edges[p].get(q)
        edges[p][q] = label if current is None else algebra.add(current, label)
        preds[q].add(p)

    for i in range(n):
        if automaton.initial[i]:
            link(source, i, algebra.one)
        for j in range(n):
            link(i, j, automaton.transitions[i, j])
        if automaton.final[i]:
            link(i, sink, algebra.one)

    def weight(s: int) -> Tuple[int, int]:
        ins = len(preds[s] - {s})
        outs = len(edges[s]) - (s in edges[s])
        return ins * outs, s

    remaining = set(range(n))
    while remaining:
        s = min(remaining, key=weight)
        remaining.discard(s)
        loop = edges[s].pop(s, None)
        preds[s].discard(s)
        through = algebra.star(loop) if loop is not None else algebra.one
        outs = edges.pop(s)
        for p in preds.pop(s):
            prefix = algebra.mul(edges[p].pop(s), through)
            for q, label in outs.items():
                link(p, q, algebra.mul(prefix, label))
        for q in outs:
            preds[q].discard(s)

    logger.debug(f"Eliminated {n} states")
    return edges[source].get(sink, algebra.zero)
