"""Characteristic polynomial by Berkowitz's division-free algorithm.

No divisions are performed, so the same code is exact over Q and every GF(p),
including characteristic 2.
"""

from __future__ import annotations

from .matrix import Matrix, _require_square
from .polynomial import Polynomial


def charpoly(m: Matrix) -> Polynomial:
    """Monic ``det(x Id - M)``."""
    _require_square(m)
    F = m.field
    red = F.reduce
    a = m.rows
    n = m.n_rows

    # poly holds coefficients highest degree first: [1, c_1, ..., c_k]
    poly = [1, red(-a[0][0])]
    for i in range(1, n):
        # leading i x i block A, column C = a[:i][i], row R = a[i][:i]
        col = [a[r][i] for r in range(i)]
        row = [a[i][c] for c in range(i)]
        # Toeplitz column: 1, -a_ii, -R C, -R A C, ..., -R A^{i-1} C
        toeplitz = [1, red(-a[i][i])]
        v = col
        for _ in range(i):
            toeplitz.append(red(-sum(x * y for x, y in zip(row, v))))
            v = [red(sum(a[r][c] * v[c] for c in range(i))) for r in range(i)]
        # new poly = T * poly, T lower-triangular Toeplitz of size (i+2) x (i+1)
        new = []
        for r in range(i + 2):
            acc = 0
            for c in range(min(r, i) + 1):
                acc += toeplitz[r - c] * poly[c]
            new.append(red(acc))
        poly = new
    return Polynomial(F, reversed(poly))
