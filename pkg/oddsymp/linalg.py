"""Dense matrices over the Laurent ring, determinants and the Cauchy lemmas."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from operator import truediv
from typing import Callable, Iterable, Sequence

from .exceptions import MatrixShapeError
from .laurent import LaurentPoly, VarTable
from .partitions import IndexSet
from .reports import CheckRun, VerificationReport

logger = logging.getLogger(__name__)

# Matrices up to this size use division-free cofactor expansion.
COFACTOR_LIMIT = 4


@dataclass(frozen=True)
class RingMatrix:
    entries: tuple[tuple[LaurentPoly, ...], ...]
    table: VarTable

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise MatrixShapeError("Rows have different lengths")
        for row in self.entries:
            for entry in row:
                if entry.table != self.table:
                    raise MatrixShapeError("Entries must share the matrix variable table")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[LaurentPoly | int]], table: VarTable) -> "RingMatrix":
        return cls(
            tuple(
                tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.constant(table, e) for e in row)
                for row in rows
            ),
            table,
        )

    @classmethod
    def identity(cls, n: int, table: VarTable | None = None) -> "RingMatrix":
        table = table or VarTable.of()
        return cls.from_rows(([int(i == j) for j in range(n)] for i in range(n)), table)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self.entries[i][j]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(tuple(zip(*self.entries)), self.table)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise MatrixShapeError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.entries))
        zero = LaurentPoly.zero(self.table)
        return RingMatrix(
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), zero) for col in columns)
                for row in self.entries
            ),
            self.table,
        )

    def swap_rows(self, i: int, j: int) -> "RingMatrix":
        entries = list(self.entries)
        entries[i], entries[j] = entries[j], entries[i]
        return RingMatrix(tuple(entries), self.table)

    def submatrix_cols(self, cols: IndexSet | Iterable[int]) -> "RingMatrix":
        """Columns picked in ascending index order."""
        chosen = cols.ascending() if isinstance(cols, IndexSet) else tuple(sorted(cols))
        for c in chosen:
            if not 0 <= c < self.cols:
                raise MatrixShapeError(f"Column {c} outside a matrix with {self.cols} columns")
        return RingMatrix(tuple(tuple(row[c] for c in chosen) for row in self.entries), self.table)


def _det_cofactor(rows: Sequence[Sequence], zero, one):
    # Laplace expansion with the minors of the trailing rows memoised per column subset.
    n = len(rows)
    minors = {(): one}
    for k in range(1, n + 1):
        row = rows[n - k]
        level = {}
        for cols in combinations(range(n), k):
            total = zero
            for pos, c in enumerate(cols):
                if not row[c]:
                    continue
                term = row[c] * minors[cols[:pos] + cols[pos + 1:]]
                total = total - term if pos % 2 else total + term
            level[cols] = total
        minors = level
    return minors[tuple(range(n))]


def _det_bareiss(rows: Sequence[Sequence], exquo: Callable, zero, one):
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    previous = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    logger.debug("Bareiss pivot swap %d <-> %d", k, i)
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exquo(pivot * m[i][j] - m[i][k] * m[k][j], previous)
        previous = pivot
    return m[-1][-1] if sign > 0 else -m[-1][-1]


def _require_square(m: RingMatrix):
    if m.rows != m.cols:
        raise MatrixShapeError(f"Determinant of a non-square {m.rows}x{m.cols} matrix")


def det_cofactor(m: RingMatrix) -> LaurentPoly:
    _require_square(m)
    return _det_cofactor(m.entries, LaurentPoly.zero(m.table), LaurentPoly.one(m.table))


def det_bareiss(m: RingMatrix) -> LaurentPoly:
    # NotDivisible from an interior step would mean a bug, so it is left to propagate.
    _require_square(m)
    return _det_bareiss(
        m.entries, LaurentPoly.exact_div, LaurentPoly.zero(m.table), LaurentPoly.one(m.table)
    )


def det(m: RingMatrix) -> LaurentPoly:
    _require_square(m)
    if m.rows <= COFACTOR_LIMIT:
        return det_cofactor(m)
    return det_bareiss(m)


def rational_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    if any(len(row) != len(rows) for row in rows):
        raise MatrixShapeError("Determinant of a non-square matrix")
    return _det_bareiss([[Fraction(e) for e in row] for row in rows], truediv, Fraction(0), Fraction(1))


def cauchy_binet_sum(x: RingMatrix, y: RingMatrix) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of Cauchy-Binet: sum of products of maximal minors, and det(X Y^T)."""
    if x.shape != y.shape:
        raise MatrixShapeError(f"Shapes differ: {x.shape} vs {y.shape}")
    if x.rows > x.cols:
        raise MatrixShapeError("Cauchy-Binet needs at least as many columns as rows")
    lhs = LaurentPoly.zero(x.table)
    for cols in combinations(range(x.cols), x.rows):
        lhs = lhs + det(x.submatrix_cols(cols)) * det(y.submatrix_cols(cols))
    return lhs, det(x @ y.transpose())


def random_integer_matrix(rng: random.Random, rows: int, cols: int, bound: int = 5) -> RingMatrix:
    return RingMatrix.from_rows(
        ([rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)), VarTable.of()
    )


def verify_cauchy_binet(trials: int = 50, seed: int = 0) -> VerificationReport:
    run = CheckRun("cauchy-binet", "det(X Y^T) as a sum over maximal minors", trials=trials, seed=seed)
    worked = RingMatrix.from_rows([[1, 0, 1], [0, 1, 1]], VarTable.of())
    lhs, rhs = cauchy_binet_sum(worked, worked)
    run.expect("worked 2x3 example", lhs == 3 and rhs == 3, f"lhs = {lhs}, rhs = {rhs}")
    rng = random.Random(seed)
    for trial in range(trials):
        rows = rng.randint(1, 4)
        cols = rng.randint(rows, 7)
        x = random_integer_matrix(rng, rows, cols)
        y = random_integer_matrix(rng, rows, cols)
        lhs, rhs = cauchy_binet_sum(x, y)
        run.expect_equal(f"trial {trial} ({rows}x{cols})", lhs, rhs)
    return run.report()


def ring_product(factors: Iterable[LaurentPoly], table: VarTable) -> LaurentPoly:
    result = LaurentPoly.one(table)
    for f in factors:
        result = result * f
    return result


def cauchy_det_check(n: int, variant: str = "difference") -> VerificationReport:
    """Cauchy determinants in cleared-denominator form.

    Row i of 1/(x_i - y_j) (resp. 1/(1 - x_i y_j)) is multiplied by its full
    denominator product, leaving polynomial entries; the determinant must then
    equal sign * prod_{i<j} (x_i - x_j)(y_i - y_j).
    """
    if variant not in ("difference", "one_minus"):
        raise ValueError(f"Unknown Cauchy determinant variant {variant!r}")
    run = CheckRun("cauchy-det", "Cauchy determinant evaluation", n=n, variant=variant)
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{i}" for i in range(1, n + 1)]
    table = VarTable.of(*xs, *ys)
    x = [LaurentPoly.variable(table, name) for name in xs]
    y = [LaurentPoly.variable(table, name) for name in ys]

    def factor(i: int, k: int) -> LaurentPoly:
        return x[i] - y[k] if variant == "difference" else 1 - x[i] * y[k]

    cleared = RingMatrix.from_rows(
        ([ring_product((factor(i, k) for k in range(n) if k != j), table) for j in range(n)] for i in range(n)),
        table,
    )
    sign = (-1) ** (n * (n - 1) // 2) if variant == "difference" else 1
    product = ring_product(
        ((x[i] - x[j]) * (y[i] - y[j]) for i in range(n) for j in range(i + 1, n)), table
    )
    run.expect_equal(f"n={n}", det(cleared), product * sign)
    return run.report()
