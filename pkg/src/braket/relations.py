"""
relations.py - Binary relations on a truncated index set {0, ..., T-1}
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple
import logging

from src.kleene.algebra import KleeneAlgebra
from src.utils.errors import ModelError
from src.utils.helpers import UtilityHelper

# Configure logging
logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class IndexRelation:
    """
    Relation on {0, ..., trunc-1}, read left to right: (a.b) relates x to z
    when a relates x to some y and b relates y to z
    """
    trunc: int
    pairs: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        if self.trunc < 1:
            raise ModelError(f"Truncation must be positive, got {self.trunc}")
        object.__setattr__(self, 'pairs', frozenset(self.pairs))
        for row, col in self.pairs:
            if not (0 <= row < self.trunc and 0 <= col < self.trunc):
                raise ModelError(f"Pair ({row},{col}) outside 0..{self.trunc - 1}",
                                 {'pair': [row, col], 'trunc': self.trunc})

    @classmethod
    def empty(cls, trunc: int) -> 'IndexRelation':
        return cls(trunc)

    @classmethod
    def identity(cls, trunc: int) -> 'IndexRelation':
        return cls(trunc, frozenset((k, k) for k in range(trunc)))

    @classmethod
    def from_pairs(cls, trunc: int, pairs: Iterable[Pair]) -> 'IndexRelation':
        return cls(trunc, frozenset((int(a), int(b)) for a, b in pairs))

    def _check(self, other: 'IndexRelation') -> None:
        if other.trunc != self.trunc:
            raise ModelError(f"Truncation mismatch: {self.trunc} vs {other.trunc}")

    def is_empty(self) -> bool:
        return not self.pairs

    def union(self, other: 'IndexRelation') -> 'IndexRelation':
        self._check(other)
        return IndexRelation(self.trunc, self.pairs | other.pairs)

    def compose(self, other: 'IndexRelation') -> 'IndexRelation':
        self._check(other)
        successors: Dict[int, List[int]] = {}
        for row, col in other.pairs:
            successors.setdefault(row, []).append(col)
        return IndexRelation(self.trunc, frozenset(
            (row, target) for row, middle in self.pairs for target in successors.get(middle, ())))

    def closure(self) -> 'IndexRelation':
        """Reflexive-transitive closure"""
        successors: Dict[int, Set[int]] = {}
        for row, col in self.pairs:
            successors.setdefault(row, set()).add(col)
        pairs: Set[Pair] = set()
        for start in range(self.trunc):
            reached = {start}
            stack = [start]
            while stack:
                node = stack.pop()
                for target in successors.get(node, ()):
                    if target not in reached:
                        reached.add(target)
                        stack.append(target)
            pairs.update((start, target) for target in reached)
        return IndexRelation(self.trunc, frozenset(pairs))

    def converse(self) -> 'IndexRelation':
        return IndexRelation(self.trunc, frozenset((col, row) for row, col in self.pairs))

    def restricted(self, domain: Iterable[int]) -> 'IndexRelation':
        """Pairs whose row and column both lie in domain"""
        keep = set(domain)
        return IndexRelation(self.trunc, frozenset(p for p in self.pairs if p[0] in keep and p[1] in keep))

    def rows(self) -> FrozenSet[int]:
        return frozenset(row for row, _ in self.pairs)

    def sorted_pairs(self) -> List[Pair]:
        return sorted(self.pairs)

    def __or__(self, other: 'IndexRelation') -> 'IndexRelation':
        return self.union(other)

    def __matmul__(self, other: 'IndexRelation') -> 'IndexRelation':
        return self.compose(other)

    def __str__(self) -> str:
        return UtilityHelper.pairs_text(self.pairs) if self.pairs else "0"


class RelationAlgebra(KleeneAlgebra[IndexRelation]):
    """Kleene algebra of relations on {0, ..., T-1}"""

    def __init__(self, trunc: int):
        self.trunc = trunc
        self._zero = IndexRelation.empty(trunc)
        self._one = IndexRelation.identity(trunc)

    @property
    def zero(self) -> IndexRelation:
        return self._zero

    @property
    def one(self) -> IndexRelation:
        return self._one

    def add(self, a: IndexRelation, b: IndexRelation) -> IndexRelation:
        return a.union(b)

    def mul(self, a: IndexRelation, b: IndexRelation) -> IndexRelation:
        return a.compose(b)

    def star(self, a: IndexRelation) -> IndexRelation:
        return a.closure()
