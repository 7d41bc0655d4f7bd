"""Dense immutable matrices over an exact field.

Public indices are 1-based, matching the ``e_{i,j}`` matrix-unit notation;
storage is a tuple of row tuples.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce as _fold
from typing import Iterable, Sequence

from ..errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, NonSquare, Singular
from ..field import Field, Raw, Scalar


class Matrix:
    __slots__ = ("field", "rows", "n_rows", "n_cols", "_hash")

    def __init__(self, field: Field, rows: Iterable[Iterable], *, _trusted: bool = False):
        if _trusted:
            rows = tuple(rows)
        else:
            rows = tuple(
                tuple(field.parse(x) if isinstance(x, str) else field.reduce(x) for x in row)
                for row in rows
            )
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows
        self.n_rows = len(rows)
        self.n_cols = width
        self._hash = None

    # construction

    @classmethod
    def _raw(cls, field: Field, rows) -> "Matrix":
        return cls(field, rows, _trusted=True)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None, field: Field) -> "Matrix":
        n_cols = n_rows if n_cols is None else n_cols
        return cls._raw(field, (tuple([0] * n_cols) for _ in range(n_rows)))

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        return cls._raw(field, (tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_units(cls, n: int, field: Field, terms: Iterable[tuple[int, int, Raw]]) -> "Matrix":
        """Sum of ``c * e_{i,j}`` over ``(i, j, c)`` triples (1-based)."""
        rows = [[0] * n for _ in range(n)]
        for i, j, c in terms:
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexOutOfRange(f"e_{{{i},{j}}} outside a {n}x{n} matrix")
            rows[i - 1][j - 1] += c
        return cls(field, rows)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence[Raw]]) -> "Matrix":
        return cls._raw(field, zip(*cols))

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij: tuple[int, int]) -> Raw:
        i, j = ij
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise IndexOutOfRange(f"({i},{j}) outside {self.n_rows}x{self.n_cols}")
        return self.rows[i - 1][j - 1]

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self[i, j], self.field)

    def column(self, j: int) -> tuple:
        return tuple(r[j - 1] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [tuple(c) for c in zip(*self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix[{self.field}]({body})"

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(x) for x in r] for r in self.rows]

    # arithmetic

    def _compatible(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._compatible(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        red = self.field.reduce
        return Matrix._raw(
            self.field,
            (tuple(red(a + b) for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._compatible(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        red = self.field.reduce
        return Matrix._raw(
            self.field,
            (tuple(red(a - b) for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> "Matrix":
        red = self.field.reduce
        return Matrix._raw(self.field, (tuple(red(-a) for a in r) for r in self.rows))

    def scale(self, c: Raw) -> "Matrix":
        red = self.field.reduce
        c = red(c)
        return Matrix._raw(self.field, (tuple(red(c * a) for a in r) for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._compatible(other)
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        red = self.field.reduce
        left, right, scale = self.rows, other.rows, 1
        if self.field.characteristic == 0:
            # integer product over a common denominator
            left, da = _clear_denominators(left)
            right, db = _clear_denominators(right)
            scale = da * db
        cols = list(zip(*right))
        out = []
        for r in left:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            sums = (sum(a * c[k] for k, a in nz) for c in cols)
            if scale == 1:
                out.append(tuple(red(x) for x in sums))
            else:
                out.append(tuple(red(Fraction(x, scale)) for x in sums))
        return Matrix._raw(self.field, out)

    def __pow__(self, e: int) -> "Matrix":
        return mat_pow(self, e)

    def apply(self, v: Sequence[Raw]) -> tuple:
        """Matrix-vector product ``M v``."""
        if len(v) != self.n_cols:
            raise DimensionMismatch(f"{self.shape} applied to length {len(v)}")
        red = self.field.reduce
        return tuple(red(sum(a * b for a, b in zip(r, v))) for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, zip(*self.rows))

    def trace(self) -> Raw:
        _require_square(self)
        return self.field.reduce(sum(self.rows[i][i] for i in range(self.n_rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self.is_square and all(
            x == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def conjugate(self, s: "Matrix", s_inv: "Matrix | None" = None) -> "Matrix":
        """Return ``S^{-1} M S``."""
        if s_inv is None:
            s_inv = inverse(s)
        return s_inv @ self @ s

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Matrix":
        return inverse(self)

    def det(self) -> Raw:
        return det(self)


def _clear_denominators(rows) -> tuple[tuple, int]:
    den = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction):
                den = math.lcm(den, x.denominator)
    if den == 1:
        return rows, 1
    return tuple(tuple(int(x * den) for x in r) for r in rows), den


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise NonSquare(f"need a square matrix, got {m.n_rows}x{m.n_cols}")


def mat_op(a: Matrix, b: Matrix, op: str) -> Matrix:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    raise ValueError(f"unknown op {op!r}")


def mat_pow(m: Matrix, e: int) -> Matrix:
    _require_square(m)
    if e < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(m.n_rows, m.field)
    base = m
    while e:
        if e & 1:
            result = result @ base
        e >>= 1
        if e:
            base = base @ base
    return result


def direct_sum(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise DimensionMismatch("direct sum of nothing")
    field = blocks[0].field
    total = sum(b.n_cols for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        if b.field != field:
            raise FieldMismatch(f"{field} vs {b.field}")
        for r in b.rows:
            rows.append((0,) * offset + r + (0,) * (total - offset - b.n_cols))
        offset += b.n_cols
    return Matrix._raw(field, rows)


# Gaussian elimination. Pivot: first nonzero entry, lowest row index.


def row_echelon(m: Matrix) -> tuple[list[list[Raw]], list[int]]:
    """Reduced row echelon form and pivot columns (0-based)."""
    F = m.field
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    top = 0
    for col in range(m.n_cols):
        if top == len(rows):
            break
        piv = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        inv = F.inv(rows[top][col])
        rows[top] = [F.reduce(x * inv) for x in rows[top]]
        pr = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [F.reduce(a - f * b) for a, b in zip(rows[i], pr)]
        pivots.append(col)
        top += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(row_echelon(m)[1])


def nullspace(m: Matrix) -> list[tuple]:
    """Basis of ``{v : M v = 0}``, one vector per free column, in column order."""
    rows, pivots = row_echelon(m)
    F = m.field
    free = [j for j in range(m.n_cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * m.n_cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.reduce(-rows[i][f])
        basis.append(tuple(v))
    return basis


def inverse(m: Matrix) -> Matrix:
    _require_square(m)
    n = m.n_rows
    aug = Matrix._raw(m.field, (r + tuple(1 if i == j else 0 for j in range(n)) for i, r in enumerate(m.rows)))
    rows, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return Matrix._raw(m.field, (tuple(r[n:]) for r in rows))


def det(m: Matrix) -> Raw:
    _require_square(m)
    F = m.field
    rows = [list(r) for r in m.rows]
    n = len(rows)
    result: Raw = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = -result
        p = rows[col][col]
        result = F.reduce(result * p)
        inv = F.inv(p)
        for i in range(col + 1, n):
            if rows[i][col] != 0:
                f = F.reduce(rows[i][col] * inv)
                rows[i] = [F.reduce(a - f * b) for a, b in zip(rows[i], rows[col])]
    return F.reduce(result)


def product(mats: Sequence[Matrix]) -> Matrix:
    return _fold(lambda a, b: a @ b, mats)
