"""
algebra.py - Kleene algebra interface with Boolean and expression instances
"""

from abc import ABC, abstractmethod
from typing import Callable, Generic, Iterable, Optional, TypeVar
import logging

from src.kleene.expressions import TensorExpr, ZERO, ONE, plus, times, star

# Configure logging
logger = logging.getLogger(__name__)

T = TypeVar('T')


class KleeneAlgebra(ABC, Generic[T]):
    """
    Idempotent semiring with star

    The natural order a <= b holds iff a + b = b; it is decided through equal(),
    so only instances with decidable equality can answer leq().
    """

    @property
    @abstractmethod
    def zero(self) -> T:
        ...

    @property
    @abstractmethod
    def one(self) -> T:
        ...

    @abstractmethod
    def add(self, a: T, b: T) -> T:
        ...

    @abstractmethod
    def mul(self, a: T, b: T) -> T:
        ...

    @abstractmethod
    def star(self, a: T) -> T:
        ...

    def equal(self, a: T, b: T) -> bool:
        return a == b

    def leq(self, a: T, b: T) -> bool:
        return self.equal(self.add(a, b), b)

    def is_zero(self, a: T) -> bool:
        return self.equal(a, self.zero)

    def is_trivially_zero(self, a: T) -> bool:
        """Cheap syntactic zero test used to skip summands"""
        return a == self.zero

    def sum(self, items: Iterable[T]) -> T:
        total = self.zero
        for item in items:
            total = self.add(total, item)
        return total

    def product(self, items: Iterable[T]) -> T:
        total = self.one
        for item in items:
            total = self.mul(total, item)
        return total


class BooleanAlgebra(KleeneAlgebra[bool]):
    """The two-element Kleene algebra B"""

    @property
    def zero(self) -> bool:
        return False

    @property
    def one(self) -> bool:
        return True

    def add(self, a: bool, b: bool) -> bool:
        return a or b

    def mul(self, a: bool, b: bool) -> bool:
        return a and b

    def star(self, a: bool) -> bool:
        return True


class ExpressionAlgebra(KleeneAlgebra[TensorExpr]):
    """
    Symbolic Kleene algebra of tensor expressions

    Operations build canonicalized expression nodes. Equality is structural unless
    an equivalence is supplied (bounded semantic equality, for instance).
    """

    def __init__(self, equivalence: Optional[Callable[[TensorExpr, TensorExpr], bool]] = None):
        self.equivalence = equivalence

    @property
    def zero(self) -> TensorExpr:
        return ZERO

    @property
    def one(self) -> TensorExpr:
        return ONE

    def add(self, a: TensorExpr, b: TensorExpr) -> TensorExpr:
        return plus(a, b)

    def mul(self, a: TensorExpr, b: TensorExpr) -> TensorExpr:
        return times(a, b)

    def star(self, a: TensorExpr) -> TensorExpr:
        return star(a)

    def equal(self, a: TensorExpr, b: TensorExpr) -> bool:
        if self.equivalence is None:
            return a == b
        return self.equivalence(a, b)

    def is_zero(self, a: TensorExpr) -> bool:
        return a.is_zero() if self.equivalence is None else self.equivalence(a, ZERO)


boolean_algebra = BooleanAlgebra()
expression_algebra = ExpressionAlgebra()
