"""
matrix.py - Square matrices over a Kleene algebra with block-recursive star

For M = [[A, B], [C, D]] split after the first n1 rows and columns,

    F  = A + B D* C
    M* = [[F*,       F* B D*            ],
          [D* C F*,  D* C F* B D* + D*  ]]
"""

import json
from typing import Any, Callable, Generic, List, Sequence, Tuple, TypeVar
import logging

from src.kleene.algebra import KleeneAlgebra
from src.utils.errors import MatrixDimensionError

# Configure logging
logger = logging.getLogger(__name__)

T = TypeVar('T')
Grid = List[List[T]]

SPLIT_STRATEGIES = ('first', 'half')


def grid_add(algebra: KleeneAlgebra, x: Grid, y: Grid) -> Grid:
    return [[algebra.add(a, b) for a, b in zip(row_x, row_y)] for row_x, row_y in zip(x, y)]


def grid_mul(algebra: KleeneAlgebra, x: Grid, y: Grid) -> Grid:
    """Rectangular product; zero summands are skipped"""
    if not x:
        return []
    inner = len(y)
    cols = len(y[0]) if y else 0
    result: Grid = []
    for row in x:
        out_row = []
        for j in range(cols):
            total = algebra.zero
            for k in range(inner):
                if algebra.is_trivially_zero(row[k]) or algebra.is_trivially_zero(y[k][j]):
                    continue
                total = algebra.add(total, algebra.mul(row[k], y[k][j]))
            out_row.append(total)
        result.append(out_row)
    return result


def grid_block(x: Grid, rows: range, cols: range) -> Grid:
    return [[x[i][j] for j in cols] for i in rows]


def grid_star(algebra: KleeneAlgebra, m: Grid, split: str = 'first') -> Grid:
    """Star of a square grid by the block recursion"""
    n = len(m)
    if n == 1:
        return [[algebra.star(m[0][0])]]

    k = 1 if split == 'first' else (n + 1) // 2
    head, tail = range(0, k), range(k, n)
    a = grid_block(m, head, head)
    b = grid_block(m, head, tail)
    c = grid_block(m, tail, head)
    d = grid_block(m, tail, tail)

    d_star = grid_star(algebra, d, split)
    d_star_c = grid_mul(algebra, d_star, c)
    f = grid_add(algebra, a, grid_mul(algebra, b, d_star_c))
    f_star = grid_star(algebra, f, split)

    f_star_b = grid_mul(algebra, f_star, b)
    top_right = grid_mul(algebra, f_star_b, d_star)
    bottom_left = grid_mul(algebra, d_star_c, f_star)
    bottom_right = grid_add(algebra, grid_mul(algebra, d_star_c, top_right), d_star)

    top = [f_star[i] + top_right[i] for i in range(k)]
    bottom = [bottom_left[i] + bottom_right[i] for i in range(n - k)]
    return top + bottom


class SquareMatrix(Generic[T]):
    """
    Immutable n x n matrix over a Kleene algebra
    """

    def __init__(self, algebra: KleeneAlgebra[T], rows: Sequence[Sequence[T]]):
        n = len(rows)
        if n == 0:
            raise MatrixDimensionError("Matrices must have dimension n >= 1")
        if any(len(row) != n for row in rows):
            raise MatrixDimensionError(f"Matrix rows must all have length {n}")
        self.algebra = algebra
        self.rows: Tuple[Tuple[T, ...], ...] = tuple(tuple(row) for row in rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> T:
        i, j = index
        return self.rows[i][j]

    def grid(self) -> Grid:
        return [list(row) for row in self.rows]

    def _check(self, other: 'SquareMatrix[T]') -> None:
        if other.n != self.n:
            raise MatrixDimensionError(f"Dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: 'SquareMatrix[T]') -> 'SquareMatrix[T]':
        self._check(other)
        return SquareMatrix(self.algebra, grid_add(self.algebra, self.grid(), other.grid()))

    def __mul__(self, other: 'SquareMatrix[T]') -> 'SquareMatrix[T]':
        self._check(other)
        return SquareMatrix(self.algebra, grid_mul(self.algebra, self.grid(), other.grid()))

    def star(self, split: str = 'first') -> 'SquareMatrix[T]':
        return matrix_star(self, split)

    def map(self, fn: Callable[[T], Any], algebra: KleeneAlgebra = None) -> 'SquareMatrix':
        return SquareMatrix(algebra or self.algebra, [[fn(x) for x in row] for row in self.rows])

    def equals(self, other: 'SquareMatrix[T]') -> bool:
        """Entrywise equality in the algebra"""
        self._check(other)
        return all(self.algebra.equal(self[i, j], other[i, j])
                   for i in range(self.n) for j in range(self.n))

    def leq(self, other: 'SquareMatrix[T]') -> bool:
        """Entrywise natural order"""
        self._check(other)
        return all(self.algebra.leq(self[i, j], other[i, j])
                   for i in range(self.n) for j in range(self.n))

    def to_nested(self, render: Callable[[T], Any] = str) -> List[List[Any]]:
        return [[render(x) for x in row] for row in self.rows]

    def to_json(self, render: Callable[[T], Any] = str) -> str:
        """Nested-array text form"""
        return json.dumps(self.to_nested(render))

    @classmethod
    def from_nested(cls, algebra: KleeneAlgebra[T], data: Sequence[Sequence[Any]],
                    read: Callable[[Any], T]) -> 'SquareMatrix[T]':
        return cls(algebra, [[read(x) for x in row] for row in data])

    @classmethod
    def identity(cls, algebra: KleeneAlgebra[T], n: int) -> 'SquareMatrix[T]':
        return cls(algebra, [[algebra.one if i == j else algebra.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, algebra: KleeneAlgebra[T], n: int) -> 'SquareMatrix[T]':
        return cls(algebra, [[algebra.zero] * n for _ in range(n)])

    def __repr__(self) -> str:
        return f"SquareMatrix({self.to_nested()})"


def matrix_star(matrix: SquareMatrix[T], split: str = 'first') -> SquareMatrix[T]:
    """
    Star of a square matrix by the block recursion

    Args:
        matrix (SquareMatrix): the matrix M
        split (str): 'first' splits off the first row and column (the default);
            'half' splits at ceil(n/2)

    Returns:
        SquareMatrix: M*
    """
    if split not in SPLIT_STRATEGIES:
        raise MatrixDimensionError(f"Unknown split strategy {split!r}")
    return SquareMatrix(matrix.algebra, grid_star(matrix.algebra, matrix.grid(), split))
