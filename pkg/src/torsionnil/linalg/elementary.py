"""Elementary matrices, 1-based.

``AddMultiple(i, j, t)`` is ``Id + t e_{i,j}``, ``Swap(i, j)`` is the
transposition matrix, ``Scale(i, s)`` is ``Id + (s-1) e_{i,i}`` and
``SignRange(i, j)`` is the identity with diagonal entries ``i..j`` negated.

SignRange is the involution the square-zero argument relies on; a literal sum
of ``Scale(k, -1)`` over ``k = i..j`` is not an involution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import IndexOutOfRange, ZeroScale
from ..field import Field, Raw
from .matrix import Matrix


@dataclass(frozen=True)
class AddMultiple:
    i: int
    j: int
    t: Raw


@dataclass(frozen=True)
class Swap:
    i: int
    j: int


@dataclass(frozen=True)
class Scale:
    i: int
    s: Raw


@dataclass(frozen=True)
class SignRange:
    i: int
    j: int


Elementary = Union[AddMultiple, Swap, Scale, SignRange]


def _check(n: int, *idx: int) -> None:
    for k in idx:
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"index {k} outside 1..{n}")


def elementary(kind: Elementary, n: int, field: Field) -> Matrix:
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    if isinstance(kind, AddMultiple):
        _check(n, kind.i, kind.j)
        rows[kind.i - 1][kind.j - 1] += kind.t
    elif isinstance(kind, Swap):
        _check(n, kind.i, kind.j)
        i, j = kind.i - 1, kind.j - 1
        rows[i], rows[j] = rows[j], rows[i]
    elif isinstance(kind, Scale):
        _check(n, kind.i)
        if field.is_zero(field.reduce(kind.s)):
            raise ZeroScale("Scale needs a nonzero factor")
        rows[kind.i - 1][kind.i - 1] = kind.s
    elif isinstance(kind, SignRange):
        _check(n, kind.i, kind.j)
        if kind.i > kind.j:
            raise IndexOutOfRange(f"SignRange needs i <= j, got {kind.i} > {kind.j}")
        for k in range(kind.i - 1, kind.j):
            rows[k][k] = -1
    else:
        raise TypeError(f"not an elementary matrix kind: {kind!r}")
    return Matrix(field, rows)
