"""Jordan structure of nilpotent matrices.

Blocks use the subdiagonal convention: the block of size ``k`` maps
``e_1 -> e_2 -> ... -> e_k -> 0``. A chain ``v, Av, ..., A^{k-1}v`` placed as
consecutive columns of ``S`` therefore gives exactly that block in
``S^{-1} A S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalVerificationFailed, NotNilpotent
from .field import Field
from .linalg import Matrix, direct_sum, inverse, nullspace
from .linalg.matrix import _require_square


@dataclass(frozen=True)
class JordanData:
    sizes: tuple[int, ...]
    basis: Matrix
    field: Field

    def block_ranges(self) -> list[tuple[int, int]]:
        """1-based inclusive column ranges of each block in ``basis``."""
        out = []
        start = 1
        for k in self.sizes:
            out.append((start, start + k - 1))
            start += k
        return out


def jordan_block(k: int, field: Field) -> Matrix:
    return Matrix(field, [[1 if i == j + 1 else 0 for j in range(k)] for i in range(k)])


def jordan_matrix(sizes: Sequence[int], field: Field) -> Matrix:
    return direct_sum(*(jordan_block(k, field) for k in sizes))


def is_nilpotent(a: Matrix) -> Optional[int]:
    """Least ``k`` with ``A^k = 0``, or ``None`` if ``A`` is not nilpotent."""
    _require_square(a)
    p = a
    for k in range(1, a.n_rows + 1):
        if p.is_zero():
            return k
        p = p @ a
    return None


class _Span:
    """Incrementally maintained echelon basis for independence tests."""

    def __init__(self, field: Field):
        self.field = field
        self.rows: list[tuple[int, list]] = []

    def _reduce(self, v) -> list:
        F = self.field
        v = list(v)
        for piv, row in self.rows:
            c = v[piv]
            if c != 0:
                v = [F.reduce(x - c * y) for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Add ``v`` if it is independent; report whether it was."""
        w = self._reduce(v)
        piv = next((i for i, x in enumerate(w) if x != 0), None)
        if piv is None:
            return False
        F = self.field
        inv = F.inv(w[piv])
        w = [F.reduce(x * inv) for x in w]
        self.rows = [
            (p, [F.reduce(x - r[piv] * y) for x, y in zip(r, w)]) if r[piv] != 0 else (p, r)
            for p, r in self.rows
        ]
        self.rows.append((piv, w))
        return True


def jordan_structure(a: Matrix) -> JordanData:
    index = is_nilpotent(a)
    if index is None:
        raise NotNilpotent("matrix is not nilpotent")
    F = a.field
    n = a.n_rows

    powers = [Matrix.identity(n, F)]
    for _ in range(index):
        powers.append(powers[-1] @ a)

    chains: list[list[tuple]] = []
    carried: list[tuple] = []
    for k in range(index, 0, -1):
        span = _Span(F)
        for v in nullspace(powers[k - 1]) if k > 1 else []:
            span.add(v)
        for v in carried:
            if not span.add(v):
                raise InternalVerificationFailed("carried chain vectors became dependent")
        tops = [v for v in nullspace(powers[k]) if span.add(v)]
        for v in tops:
            chain = [v]
            for _ in range(k - 1):
                chain.append(a.apply(chain[-1]))
            chains.append(chain)
        carried = [a.apply(v) for v in carried + tops]

    sizes = tuple(len(c) for c in chains)
    basis = Matrix.from_columns(F, [v for c in chains for v in c])
    if sum(sizes) != n:
        raise InternalVerificationFailed(f"block sizes {sizes} do not sum to {n}")
    if inverse(basis) @ a @ basis != jordan_matrix(sizes, F):
        raise InternalVerificationFailed("S^-1 A S is not the Jordan matrix")
    return JordanData(sizes, basis, F)
